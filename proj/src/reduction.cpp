#include "pcvp/reduction.hpp"

#include <algorithm>
#include <stdexcept>

namespace pcvp {

PCInstance PCInstance::create(int k,
                              const std::vector<std::pair<Cell, Cell>>& edges) {
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    PCInstance pc;
    pc.k = k;
    for (auto [a, b] : edges) {
        if (a.row < 1 || a.row > k || a.col < 1 || a.col > k ||
            b.row < 1 || b.row > k || b.col < 1 || b.col > k)
            throw std::invalid_argument("grid coordinate out of range");
        if (a == b)
            throw std::invalid_argument("self-pairs are not allowed");
        if (b < a)
            std::swap(a, b);
        pc.edges.emplace(a, b);
    }
    return pc;
}

bool PCInstance::has_edge(Cell a, Cell b) const {
    if (b < a)
        std::swap(a, b);
    return edges.count({a, b}) != 0;
}

std::string GridEdge::id() const {
    return std::to_string(p) + "." + std::to_string(gamma) + "." +
           std::to_string(q) + "." + std::to_string(delta);
}

std::pair<PCInstance, std::vector<GridEdge>> normalize_pc(const PCInstance& raw) {
    if (raw.k < 1)
        throw std::invalid_argument("k must be positive");
    std::set<GridEdge> retained;
    for (const auto& [a, b] : raw.edges) {
        if (a.row == b.row)
            continue;  // same-row edges cannot join a permutation clique
        GridEdge e;
        if (a.row < b.row)
            e = {a.row, b.row, a.col, b.col};
        else
            e = {b.row, a.row, b.col, a.col};
        retained.insert(e);
    }
    PCInstance norm;
    norm.k = raw.k;
    std::vector<GridEdge> order;
    for (const GridEdge& e : retained) {
        norm.edges.emplace(Cell{e.p, e.gamma}, Cell{e.q, e.delta});
        order.push_back(e);
    }
    return {std::move(norm), std::move(order)};
}

std::vector<VertexId> FrameIds::all_in_order() const {
    std::vector<VertexId> out;
    out.insert(out.end(), v_left.begin(), v_left.end());
    out.insert(out.end(), u_left.begin(), u_left.end());
    out.insert(out.end(), v_right.begin(), v_right.end());
    out.insert(out.end(), u_right.begin(), u_right.end());
    for (std::size_t aa = 0; aa < ladder_v.size(); ++aa) {
        out.insert(out.end(), ladder_v[aa].begin(), ladder_v[aa].end());
        out.insert(out.end(), ladder_u[aa].begin(), ladder_u[aa].end());
    }
    return out;
}

namespace {

void add_cycle_ladder(Graph& g, int n, std::vector<VertexId>& vs,
                      std::vector<VertexId>& us, const std::string& side) {
    for (int i = 1; i <= n; ++i)
        vs.push_back(g.add_vertex(Role{RoleTag::FrameV, side, i, 0, 0}));
    for (int i = 1; i <= n; ++i)
        us.push_back(g.add_vertex(Role{RoleTag::FrameU, side, i, 0, 0}));
    for (int i = 0; i < n; ++i) {
        g.add_edge(vs[i], vs[(i + 1) % n]);
        g.add_edge(us[i], us[(i + 1) % n]);
        g.add_edge(vs[i], us[i]);
    }
}

}  // namespace

std::pair<Graph, FrameIds> build_frame(int k) {
    if (k < 2)
        throw std::invalid_argument("frame needs k >= 2");
    Graph g;
    FrameIds f;
    add_cycle_ladder(g, 2 * k, f.v_left, f.u_left, "L");
    add_cycle_ladder(g, 2 * k, f.v_right, f.u_right, "R");
    for (int alpha = 1; alpha <= k; ++alpha) {
        std::array<VertexId, 4> lv{}, lu{};
        std::string scope = std::to_string(alpha);
        for (int i = 0; i <= 3; ++i)
            lv[i] = g.add_vertex(Role{RoleTag::FrameV, scope, i, 0, 0});
        for (int i = 0; i <= 3; ++i)
            lu[i] = g.add_vertex(Role{RoleTag::FrameU, scope, i, 0, 0});
        for (int i = 0; i < 3; ++i) {
            g.add_edge(lv[i], lv[i + 1]);
            g.add_edge(lu[i], lu[i + 1]);
        }
        for (int i = 0; i <= 3; ++i)
            g.add_edge(lv[i], lu[i]);
        // hook the ladder between the two cycle ladders
        g.add_edge(f.v_left[2 * alpha - 2], lv[0]);   // v^L_{2a-1}
        g.add_edge(f.v_left[2 * alpha - 1], lu[0]);   // v^L_{2a}
        g.add_edge(f.v_right[2 * alpha - 2], lv[3]);  // v^R_{2a-1}
        g.add_edge(f.v_right[2 * alpha - 1], lu[3]);  // v^R_{2a}
        f.ladder_v.push_back(lv);
        f.ladder_u.push_back(lu);
    }
    return {std::move(g), std::move(f)};
}

const ChoiceGadget& Manifest::choice_gadget(int i, int beta) const {
    return choice_gadgets.at(static_cast<std::size_t>(i - 1) * k + (beta - 1));
}

ChoiceGadget& Manifest::choice_gadget(int i, int beta) {
    return choice_gadgets.at(static_cast<std::size_t>(i - 1) * k + (beta - 1));
}

VertexId Manifest::link(int i, int alpha, int beta) const {
    return links.at(i - 1).at(alpha - 1).at(beta - 1);
}

bool Manifest::operator==(const Manifest& o) const {
    return kind == o.kind && k == o.k && grid_edges == o.grid_edges &&
           symbols == o.symbols;
}

namespace {

constexpr int kind_code(Manifest::Kind kind) {
    switch (kind) {
    case Manifest::Kind::Reduced:
        return 0;
    case Manifest::Kind::TrivialYes:
        return 1;
    case Manifest::Kind::TrivialNo:
        return 2;
    case Manifest::Kind::Gadget:
        return 3;
    }
    return -1;
}

void emit_meta(Manifest& m) {
    m.symbols.emplace_back("meta.kind", kind_code(m.kind));
    m.symbols.emplace_back("meta.k", m.k);
}

void emit_frame_symbols(Manifest& m) {
    const FrameIds& f = m.frame;
    for (std::size_t i = 0; i < f.v_left.size(); ++i)
        m.symbols.emplace_back("v.L." + std::to_string(i + 1), f.v_left[i]);
    for (std::size_t i = 0; i < f.u_left.size(); ++i)
        m.symbols.emplace_back("u.L." + std::to_string(i + 1), f.u_left[i]);
    for (std::size_t i = 0; i < f.v_right.size(); ++i)
        m.symbols.emplace_back("v.R." + std::to_string(i + 1), f.v_right[i]);
    for (std::size_t i = 0; i < f.u_right.size(); ++i)
        m.symbols.emplace_back("u.R." + std::to_string(i + 1), f.u_right[i]);
    for (std::size_t aa = 0; aa < f.ladder_v.size(); ++aa) {
        std::string alpha = std::to_string(aa + 1);
        for (int i = 0; i <= 3; ++i)
            m.symbols.emplace_back("v." + alpha + "." + std::to_string(i),
                                   f.ladder_v[aa][i]);
        for (int i = 0; i <= 3; ++i)
            m.symbols.emplace_back("u." + alpha + "." + std::to_string(i),
                                   f.ladder_u[aa][i]);
    }
}

// Builds a choice gadget around pre-existing attachment vertices.
ChoiceGadget embed_choice_gadget(Graph& g, const std::string& id,
                                 const std::vector<VertexId>& attachments,
                                 Manifest& m) {
    ChoiceGadget cg;
    cg.s = static_cast<int>(attachments.size());
    cg.id = id;
    cg.b_ids = attachments;
    for (int t = 0; t <= 2 * cg.s + 1; ++t) {
        cg.a_ids.push_back(g.add_vertex(Role{RoleTag::ChoiceA, id, t, 0, 0}));
        m.symbols.emplace_back(id + ".a." + std::to_string(t), cg.a_ids.back());
    }
    auto add_k5 = [&](VertexId x, VertexId y) {
        int t = static_cast<int>(cg.k5_edges.size());
        std::string k5_id = id + ".k5." + std::to_string(t);
        auto z = introduce_k5_edge(g, x, y, k5_id);
        for (int slot = 1; slot <= 3; ++slot)
            m.symbols.emplace_back(k5_id + "." + std::to_string(slot),
                                   z[slot - 1]);
        cg.k5_edges.push_back({x, y, z});
    };
    for (int t = 0; t < 2 * cg.s + 1; ++t)
        add_k5(cg.a(t), cg.a(t + 1));
    for (int j = 1; j <= cg.s; ++j) {
        add_k5(cg.b(j), cg.a(2 * j - 1));
        add_k5(cg.b(j), cg.a(2 * j));
    }
    for (int j = 1; j <= cg.s; ++j)
        m.symbols.emplace_back(id + ".b." + std::to_string(j), cg.b(j));
    return cg;
}

VPInstance trivial_yes(int k) {
    VPInstance vp;
    vp.budget = 0;
    vp.manifest.kind = Manifest::Kind::TrivialYes;
    vp.manifest.k = k;
    emit_meta(vp.manifest);
    VertexId v = vp.graph.add_vertex();
    vp.manifest.symbols.emplace_back("flag.trivial-yes", v);
    return vp;
}

VPInstance trivial_no(int k) {
    VPInstance vp;
    vp.budget = 0;
    vp.manifest.kind = Manifest::Kind::TrivialNo;
    vp.manifest.k = k;
    emit_meta(vp.manifest);
    std::vector<VertexId> vs;
    for (int i = 0; i < 5; ++i)
        vs.push_back(vp.graph.add_vertex());
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            vp.graph.add_edge(vs[i], vs[j]);
    vp.manifest.symbols.emplace_back("flag.trivial-no", vs[0]);
    return vp;
}

}  // namespace

VPInstance reduce(const PCInstance& pc) {
    auto [norm, grid_edges] = normalize_pc(pc);
    const int k = norm.k;

    if (k == 1)
        return trivial_yes(k);

    // group retained edges by row pair; every pair must contribute one
    std::map<std::pair<int, int>, std::vector<int>> by_pair;
    for (int idx = 0; idx < static_cast<int>(grid_edges.size()); ++idx)
        by_pair[{grid_edges[idx].p, grid_edges[idx].q}].push_back(idx);
    for (int p = 1; p <= k; ++p)
        for (int q = p + 1; q <= k; ++q)
            if (!by_pair.count({p, q}))
                return trivial_no(k);

    VPInstance vp;
    Manifest& m = vp.manifest;
    m.kind = Manifest::Kind::Reduced;
    m.k = k;
    m.grid_edges = grid_edges;
    emit_meta(m);

    auto [frame_graph, frame] = build_frame(k);
    vp.graph = std::move(frame_graph);
    m.frame = frame;
    emit_frame_symbols(m);

    for (int beta = 1; beta <= k; ++beta) {
        m.apex.push_back(vp.graph.add_vertex(
            Role{RoleTag::Apex, "", beta, 0, 0}));
        m.symbols.emplace_back("x." + std::to_string(beta), m.apex.back());
    }

    // wiring: three layers of links, each layer one k-choice gadget per apex
    for (int i = 1; i <= 3; ++i) {
        m.links[i - 1].assign(k, std::vector<VertexId>(k, 0));
        for (int beta = 1; beta <= k; ++beta) {
            std::vector<VertexId> layer_links;
            for (int alpha = 1; alpha <= k; ++alpha) {
                VertexId y = vp.graph.add_vertex(
                    Role{RoleTag::Link, "", i, alpha, beta});
                m.links[i - 1][alpha - 1][beta - 1] = y;
                m.symbols.emplace_back("y." + std::to_string(i) + "." +
                                           std::to_string(alpha) + "." +
                                           std::to_string(beta),
                                       y);
                vp.graph.add_edge(m.frame.ladder_v[alpha - 1][i], y);
                vp.graph.add_edge(m.apex[beta - 1], y);
                layer_links.push_back(y);
            }
            std::string gid = "C." + std::to_string(i) + "." +
                              std::to_string(beta);
            m.choice_gadgets.push_back(
                embed_choice_gadget(vp.graph, gid, layer_links, m));
        }
    }

    // grid-edge gadgets
    for (const GridEdge& e : grid_edges) {
        EdgeGadgetIds eg;
        eg.e = e;
        std::string eid = e.id();
        eg.left = vp.graph.add_vertex(Role{RoleTag::EdgeLeft, eid, 0, 0, 0});
        m.symbols.emplace_back("c." + eid + ".L", eg.left);
        eg.mid = vp.graph.add_vertex(Role{RoleTag::EdgeMid, eid, 0, 0, 0});
        m.symbols.emplace_back("c." + eid + ".M", eg.mid);
        eg.right = vp.graph.add_vertex(Role{RoleTag::EdgeRight, eid, 0, 0, 0});
        m.symbols.emplace_back("c." + eid + ".R", eg.right);

        vp.graph.add_edge(m.frame.ladder_v[e.p - 1][0], eg.left);
        vp.graph.add_edge(m.apex[e.gamma - 1], eg.left);
        vp.graph.add_edge(m.frame.ladder_v[e.q - 1][0], eg.right);
        vp.graph.add_edge(m.apex[e.delta - 1], eg.right);

        std::string lid = "c." + eid + ".k5.L";
        eg.helpers_left = introduce_k5_edge(vp.graph, eg.left, eg.mid, lid);
        for (int slot = 1; slot <= 3; ++slot)
            m.symbols.emplace_back(lid + "." + std::to_string(slot),
                                   eg.helpers_left[slot - 1]);
        std::string rid = "c." + eid + ".k5.R";
        eg.helpers_right = introduce_k5_edge(vp.graph, eg.mid, eg.right, rid);
        for (int slot = 1; slot <= 3; ++slot)
            m.symbols.emplace_back(rid + "." + std::to_string(slot),
                                   eg.helpers_right[slot - 1]);
        m.edge_gadgets.push_back(eg);
    }

    // one pair gadget per row pair, attached at the edge gadgets' left ends
    for (int p = 1; p <= k; ++p) {
        for (int q = p + 1; q <= k; ++q) {
            std::vector<VertexId> attach;
            for (int idx : by_pair.at({p, q}))
                attach.push_back(m.edge_gadgets[idx].left);
            std::string gid = "Cpq." + std::to_string(p) + "." +
                              std::to_string(q);
            m.pair_gadgets.emplace(
                std::make_pair(p, q),
                embed_choice_gadget(vp.graph, gid, attach, m));
        }
    }

    vp.budget = 3 * static_cast<long long>(grid_edges.size()) +
                6 * static_cast<long long>(k) * k;
    return vp;
}

VPInstance gadget_instance(int s) {
    auto [g, cg] = build_choice_gadget(s, "g");
    VPInstance vp;
    vp.graph = std::move(g);
    vp.budget = 2 * s;
    Manifest& m = vp.manifest;
    m.kind = Manifest::Kind::Gadget;
    m.k = 0;
    m.standalone = cg;
    emit_meta(m);
    for (int t = 0; t <= 2 * s + 1; ++t)
        m.symbols.emplace_back("g.a." + std::to_string(t), cg.a(t));
    for (int j = 1; j <= s; ++j)
        m.symbols.emplace_back("g.b." + std::to_string(j), cg.b(j));
    for (std::size_t t = 0; t < cg.k5_edges.size(); ++t)
        for (int slot = 1; slot <= 3; ++slot)
            m.symbols.emplace_back(
                "g.k5." + std::to_string(t) + "." + std::to_string(slot),
                cg.k5_edges[t].helpers[slot - 1]);
    return vp;
}

}  // namespace pcvp
