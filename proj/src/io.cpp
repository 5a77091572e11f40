#include "pcvp/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

namespace pcvp {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok)
        out.push_back(tok);
    return out;
}

std::vector<std::string> split_dots(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t dot = s.find('.', start);
        if (dot == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, dot - start));
        start = dot + 1;
    }
}

int parse_int(const std::string& tok, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer for " + what + ", got '" +
                                   tok + "'");
    }
}

long long parse_ll(const std::string& tok, int line, const std::string& what) {
    try {
        std::size_t used = 0;
        long long value = std::stoll(tok, &used);
        if (used != tok.size())
            throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer for " + what + ", got '" +
                                   tok + "'");
    }
}

std::string role_params(const Role& r) {
    switch (r.tag) {
    case RoleTag::FrameV:
        return "framev " + r.scope + " " + std::to_string(r.a);
    case RoleTag::FrameU:
        return "frameu " + r.scope + " " + std::to_string(r.a);
    case RoleTag::Apex:
        return "apex " + std::to_string(r.a);
    case RoleTag::Link:
        return "link " + std::to_string(r.a) + " " + std::to_string(r.b) +
               " " + std::to_string(r.c);
    case RoleTag::ChoiceA:
        return "choicea " + r.scope + " " + std::to_string(r.a);
    case RoleTag::ChoiceB:
        return "choiceb " + r.scope + " " + std::to_string(r.a);
    case RoleTag::K5Helper:
        return "k5helper " + r.scope + " " + std::to_string(r.a);
    case RoleTag::EdgeLeft:
        return "edgeleft " + r.scope;
    case RoleTag::EdgeMid:
        return "edgemid " + r.scope;
    case RoleTag::EdgeRight:
        return "edgeright " + r.scope;
    case RoleTag::Plain:
        return "plain";
    }
    return "plain";
}

Role parse_role(const std::vector<std::string>& toks, int line) {
    // toks[0] = "v", toks[1] = id, toks[2] = tag, rest params
    auto need = [&](std::size_t count) {
        if (toks.size() != 3 + count)
            throw ParseError(line, "wrong parameter count for role '" +
                                       toks[2] + "'");
    };
    const std::string& tag = toks[2];
    Role r;
    if (tag == "framev" || tag == "frameu") {
        need(2);
        r.tag = tag == "framev" ? RoleTag::FrameV : RoleTag::FrameU;
        r.scope = toks[3];
        r.a = parse_int(toks[4], line, "frame index");
    } else if (tag == "apex") {
        need(1);
        r.tag = RoleTag::Apex;
        r.a = parse_int(toks[3], line, "apex index");
    } else if (tag == "link") {
        need(3);
        r.tag = RoleTag::Link;
        r.a = parse_int(toks[3], line, "link level");
        r.b = parse_int(toks[4], line, "link ladder");
        r.c = parse_int(toks[5], line, "link apex");
    } else if (tag == "choicea" || tag == "choiceb") {
        need(2);
        r.tag = tag == "choicea" ? RoleTag::ChoiceA : RoleTag::ChoiceB;
        r.scope = toks[3];
        r.a = parse_int(toks[4], line, "gadget index");
    } else if (tag == "k5helper") {
        need(2);
        r.tag = RoleTag::K5Helper;
        r.scope = toks[3];
        r.a = parse_int(toks[4], line, "helper slot");
    } else if (tag == "edgeleft" || tag == "edgemid" || tag == "edgeright") {
        need(1);
        r.tag = tag == "edgeleft"  ? RoleTag::EdgeLeft
                : tag == "edgemid" ? RoleTag::EdgeMid
                                   : RoleTag::EdgeRight;
        r.scope = toks[3];
    } else if (tag == "plain") {
        need(0);
        r.tag = RoleTag::Plain;
    } else {
        throw ParseError(line, "unknown role tag '" + tag + "'");
    }
    return r;
}

GridEdge parse_grid_edge_id(const std::string& scope, int line) {
    auto parts = split_dots(scope);
    if (parts.size() != 4)
        throw ParseError(line, "malformed grid-edge id '" + scope + "'");
    GridEdge e;
    e.p = parse_int(parts[0], line, "grid edge row");
    e.gamma = parse_int(parts[1], line, "grid edge column");
    e.q = parse_int(parts[2], line, "grid edge row");
    e.delta = parse_int(parts[3], line, "grid edge column");
    return e;
}

// Recomputes the endpoint pair of the t-th K5-edge of a choice gadget.
std::pair<VertexId, VertexId> gadget_k5_ends(const ChoiceGadget& cg, int t) {
    if (t <= 2 * cg.s)
        return {cg.a(t), cg.a(t + 1)};
    int rel = t - (2 * cg.s + 1);
    int j = rel / 2 + 1;
    return rel % 2 == 0 ? std::make_pair(cg.b(j), cg.a(2 * j - 1))
                        : std::make_pair(cg.b(j), cg.a(2 * j));
}

void rebuild_gadget_k5(ChoiceGadget& cg,
                       const std::map<int, std::array<VertexId, 3>>& helpers,
                       int line) {
    const int total = 4 * cg.s + 1;
    if (static_cast<int>(helpers.size()) != total)
        throw ParseError(line, "gadget " + cg.id + " has wrong K5-edge count");
    for (int t = 0; t < total; ++t) {
        auto it = helpers.find(t);
        if (it == helpers.end())
            throw ParseError(line, "gadget " + cg.id + " misses K5-edge " +
                                       std::to_string(t));
        auto [x, y] = gadget_k5_ends(cg, t);
        cg.k5_edges.push_back({x, y, it->second});
    }
}

struct HelperKey {
    std::string owner;
    int t = -1;          // backbone/attachment K5-edge index, or -1
    char side = 0;       // 'L'/'R' for grid-edge chain K5-edges
};

HelperKey parse_helper_scope(const std::string& scope, int line) {
    auto parts = split_dots(scope);
    // "<gadget>.k5.<t>" or "c.<p>.<gamma>.<q>.<delta>.k5.<L|R>"
    if (parts.size() < 3 || parts[parts.size() - 2] != "k5")
        throw ParseError(line, "malformed K5-edge id '" + scope + "'");
    HelperKey key;
    for (std::size_t i = 0; i + 2 < parts.size(); ++i)
        key.owner += (i ? "." : "") + parts[i];
    const std::string& last = parts.back();
    if (last == "L" || last == "R")
        key.side = last[0];
    else
        key.t = parse_int(last, line, "K5-edge index");
    return key;
}

}  // namespace

std::string encode_instance(const VPInstance& vp) {
    std::ostringstream out;
    out << "p vp " << vp.graph.vertex_count() << " " << vp.graph.edge_count()
        << " " << vp.budget << "\n";
    for (VertexId v : vp.graph.vertices())
        out << "v " << v << " " << role_params(vp.graph.role(v)) << "\n";
    for (const auto& [u, v] : vp.graph.edges())
        out << "e " << u << " " << v << "\n";
    out << "# manifest\n";
    for (const auto& [symbol, id] : vp.manifest.symbols)
        out << "s " << symbol << " " << id << "\n";
    return out.str();
}

namespace {

void rebuild_manifest(VPInstance& vp, int header_line) {
    Manifest& m = vp.manifest;
    const Graph& g = vp.graph;

    int kind_code = -1;
    for (const auto& [symbol, id] : m.symbols) {
        if (symbol == "meta.kind")
            kind_code = static_cast<int>(id);
        else if (symbol == "meta.k")
            m.k = static_cast<int>(id);
    }
    switch (kind_code) {
    case 0:
        m.kind = Manifest::Kind::Reduced;
        break;
    case 1:
        m.kind = Manifest::Kind::TrivialYes;
        return;
    case 2:
        m.kind = Manifest::Kind::TrivialNo;
        return;
    case 3:
        m.kind = Manifest::Kind::Gadget;
        break;
    default:
        throw ParseError(header_line, "missing or unknown meta.kind entry");
    }

    // collect role groups
    std::map<std::string, std::map<int, VertexId>> choice_a;   // gadget -> t
    std::map<std::string, std::map<int, VertexId>> choice_b;   // gadget -> j
    std::map<std::string, std::map<int, std::array<VertexId, 3>>> gadget_helpers;
    std::map<std::string, EdgeGadgetIds> chains;               // by edge id
    int max_link_level = 0;

    for (VertexId v : g.vertices()) {
        const Role& r = g.role(v);
        switch (r.tag) {
        case RoleTag::FrameV:
        case RoleTag::FrameU: {
            bool is_v = r.tag == RoleTag::FrameV;
            if (r.scope == "L" || r.scope == "R") {
                auto& side = r.scope == "L"
                                 ? (is_v ? m.frame.v_left : m.frame.u_left)
                                 : (is_v ? m.frame.v_right : m.frame.u_right);
                if (static_cast<int>(side.size()) < r.a)
                    side.resize(r.a, 0);
                side[r.a - 1] = v;
            } else {
                int alpha = parse_int(r.scope, header_line, "ladder index");
                if (static_cast<int>(m.frame.ladder_v.size()) < alpha) {
                    m.frame.ladder_v.resize(alpha);
                    m.frame.ladder_u.resize(alpha);
                }
                if (r.a < 0 || r.a > 3)
                    throw ParseError(header_line, "ladder position out of range");
                (is_v ? m.frame.ladder_v : m.frame.ladder_u)[alpha - 1][r.a] = v;
            }
            break;
        }
        case RoleTag::Apex:
            if (static_cast<int>(m.apex.size()) < r.a)
                m.apex.resize(r.a, 0);
            m.apex[r.a - 1] = v;
            break;
        case RoleTag::Link:
            max_link_level = std::max(max_link_level, r.a);
            break;
        case RoleTag::ChoiceA:
            choice_a[r.scope][r.a] = v;
            break;
        case RoleTag::ChoiceB:
            choice_b[r.scope][r.a] = v;
            break;
        case RoleTag::K5Helper: {
            HelperKey key = parse_helper_scope(r.scope, header_line);
            if (r.a < 1 || r.a > 3)
                throw ParseError(header_line, "helper slot out of range");
            if (key.side) {
                EdgeGadgetIds& eg = chains[key.owner.substr(2)];
                (key.side == 'L' ? eg.helpers_left
                                 : eg.helpers_right)[r.a - 1] = v;
            } else {
                gadget_helpers[key.owner][key.t][r.a - 1] = v;
            }
            break;
        }
        case RoleTag::EdgeLeft:
            chains[r.scope].left = v;
            break;
        case RoleTag::EdgeMid:
            chains[r.scope].mid = v;
            break;
        case RoleTag::EdgeRight:
            chains[r.scope].right = v;
            break;
        case RoleTag::Plain:
            break;
        }
    }

    if (m.kind == Manifest::Kind::Gadget) {
        auto it_a = choice_a.find("g");
        auto it_b = choice_b.find("g");
        if (it_a == choice_a.end() || it_b == choice_b.end())
            throw ParseError(header_line, "gadget instance without gadget roles");
        ChoiceGadget& cg = m.standalone;
        cg.id = "g";
        cg.s = static_cast<int>(it_b->second.size());
        for (int t = 0; t <= 2 * cg.s + 1; ++t) {
            auto at = it_a->second.find(t);
            if (at == it_a->second.end())
                throw ParseError(header_line, "gadget backbone is incomplete");
            cg.a_ids.push_back(at->second);
        }
        for (int j = 1; j <= cg.s; ++j) {
            auto bt = it_b->second.find(j);
            if (bt == it_b->second.end())
                throw ParseError(header_line, "gadget attachments are incomplete");
            cg.b_ids.push_back(bt->second);
        }
        rebuild_gadget_k5(cg, gadget_helpers["g"], header_line);
        return;
    }

    // reduced instance
    const int k = m.k;
    if (k < 2)
        throw ParseError(header_line, "reduced instance needs k >= 2");
    auto expect_size = [&](std::size_t got, std::size_t want,
                           const std::string& what) {
        if (got != want)
            throw ParseError(header_line, "inconsistent " + what + " count");
    };
    expect_size(m.frame.v_left.size(), 2 * k, "frame");
    expect_size(m.frame.u_left.size(), 2 * k, "frame");
    expect_size(m.frame.v_right.size(), 2 * k, "frame");
    expect_size(m.frame.u_right.size(), 2 * k, "frame");
    expect_size(m.frame.ladder_v.size(), k, "ladder");
    expect_size(m.apex.size(), k, "apex");

    for (auto& layer : m.links)
        layer.assign(k, std::vector<VertexId>(k, 0));
    for (VertexId v : g.vertices()) {
        const Role& r = g.role(v);
        if (r.tag != RoleTag::Link)
            continue;
        if (r.a < 1 || r.a > 3 || r.b < 1 || r.b > k || r.c < 1 || r.c > k)
            throw ParseError(header_line, "link role out of range");
        m.links[r.a - 1][r.b - 1][r.c - 1] = v;
    }
    for (const auto& layer : m.links)
        for (const auto& row : layer)
            for (VertexId v : row)
                if (v == 0)
                    throw ParseError(header_line, "incomplete link layer");

    // grid-edge chains in normalized order
    std::vector<std::pair<GridEdge, EdgeGadgetIds>> ordered;
    for (auto& [eid, eg] : chains) {
        eg.e = parse_grid_edge_id(eid, header_line);
        if (!eg.left || !eg.mid || !eg.right)
            throw ParseError(header_line, "incomplete grid-edge chain " + eid);
        ordered.emplace_back(eg.e, eg);
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [e, eg] : ordered) {
        m.grid_edges.push_back(e);
        m.edge_gadgets.push_back(eg);
    }

    // wiring gadgets, level-major then apex order
    m.choice_gadgets.resize(static_cast<std::size_t>(3) * k);
    for (int i = 1; i <= 3; ++i) {
        for (int beta = 1; beta <= k; ++beta) {
            std::string gid =
                "C." + std::to_string(i) + "." + std::to_string(beta);
            auto it = choice_a.find(gid);
            if (it == choice_a.end())
                throw ParseError(header_line, "missing wiring gadget " + gid);
            ChoiceGadget cg;
            cg.id = gid;
            cg.s = k;
            for (int t = 0; t <= 2 * k + 1; ++t) {
                auto at = it->second.find(t);
                if (at == it->second.end())
                    throw ParseError(header_line,
                                     "gadget backbone is incomplete");
                cg.a_ids.push_back(at->second);
            }
            for (int alpha = 1; alpha <= k; ++alpha)
                cg.b_ids.push_back(m.links[i - 1][alpha - 1][beta - 1]);
            rebuild_gadget_k5(cg, gadget_helpers[gid], header_line);
            m.choice_gadget(i, beta) = std::move(cg);
        }
    }

    // pair gadgets
    std::map<std::pair<int, int>, std::vector<VertexId>> attach;
    for (const EdgeGadgetIds& eg : m.edge_gadgets)
        attach[{eg.e.p, eg.e.q}].push_back(eg.left);
    for (const auto& [pq, bs] : attach) {
        std::string gid = "Cpq." + std::to_string(pq.first) + "." +
                          std::to_string(pq.second);
        auto it = choice_a.find(gid);
        if (it == choice_a.end())
            throw ParseError(header_line, "missing pair gadget " + gid);
        ChoiceGadget cg;
        cg.id = gid;
        cg.s = static_cast<int>(bs.size());
        for (int t = 0; t <= 2 * cg.s + 1; ++t) {
            auto at = it->second.find(t);
            if (at == it->second.end())
                throw ParseError(header_line, "gadget backbone is incomplete");
            cg.a_ids.push_back(at->second);
        }
        cg.b_ids = bs;
        rebuild_gadget_k5(cg, gadget_helpers[gid], header_line);
        m.pair_gadgets.emplace(pq, std::move(cg));
    }
}

}  // namespace

VPInstance decode_instance(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    int lineno = 0;

    VPInstance vp;
    bool have_header = false;
    long long want_n = 0, want_m = 0;
    int header_line = 0;
    bool in_manifest = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty())
            continue;
        if (line == "# manifest") {
            in_manifest = true;
            continue;
        }
        if (line[0] == '#')
            continue;
        auto toks = split_ws(line);
        if (toks.empty())
            continue;
        if (toks[0] == "p") {
            if (have_header)
                throw ParseError(lineno, "duplicate header");
            if (toks.size() != 5 || toks[1] != "vp")
                throw ParseError(lineno, "malformed header");
            want_n = parse_ll(toks[2], lineno, "vertex count");
            want_m = parse_ll(toks[3], lineno, "edge count");
            vp.budget = parse_ll(toks[4], lineno, "budget");
            if (want_n < 0 || want_m < 0 || vp.budget < 0)
                throw ParseError(lineno, "negative header field");
            have_header = true;
            header_line = lineno;
        } else if (toks[0] == "v") {
            if (!have_header)
                throw ParseError(lineno, "vertex line before header");
            if (toks.size() < 3)
                throw ParseError(lineno, "malformed vertex line");
            VertexId id = parse_int(toks[1], lineno, "vertex id");
            if (id <= 0)
                throw ParseError(lineno, "vertex ids must be positive");
            if (vp.graph.has_vertex(id))
                throw ParseError(lineno, "duplicate vertex id");
            vp.graph.add_vertex_with_id(id, parse_role(toks, lineno));
        } else if (toks[0] == "e") {
            if (!have_header)
                throw ParseError(lineno, "edge line before header");
            if (toks.size() != 3)
                throw ParseError(lineno, "malformed edge line");
            VertexId u = parse_int(toks[1], lineno, "edge endpoint");
            VertexId v = parse_int(toks[2], lineno, "edge endpoint");
            if (!vp.graph.has_vertex(u) || !vp.graph.has_vertex(v))
                throw ParseError(lineno, "edge endpoint not declared");
            if (u == v)
                throw ParseError(lineno, "self-loop");
            if (vp.graph.has_edge(u, v))
                throw ParseError(lineno, "duplicate edge");
            vp.graph.add_edge(u, v);
        } else if (toks[0] == "s") {
            if (!in_manifest)
                throw ParseError(lineno, "symbol line outside manifest block");
            if (toks.size() != 3)
                throw ParseError(lineno, "malformed symbol line");
            vp.manifest.symbols.emplace_back(
                toks[1], parse_int(toks[2], lineno, "symbol id"));
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (!have_header)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing header");
    if (static_cast<long long>(vp.graph.vertex_count()) != want_n)
        throw ParseError(header_line, "header vertex count disagrees with body");
    if (static_cast<long long>(vp.graph.edge_count()) != want_m)
        throw ParseError(header_line, "header edge count disagrees with body");

    rebuild_manifest(vp, header_line);
    return vp;
}

std::string encode_pc(const PCInstance& pc) {
    std::ostringstream out;
    out << "k " << pc.k << "\n";
    for (const auto& [a, b] : pc.edges)
        out << "pe " << a.row << " " << a.col << " " << b.row << " " << b.col
            << "\n";
    return out.str();
}

PCInstance decode_pc(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    int lineno = 0;
    int k = -1;
    std::vector<std::pair<Cell, Cell>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        auto toks = split_ws(line);
        if (toks.empty())
            continue;
        if (toks[0] == "k") {
            if (k >= 0)
                throw ParseError(lineno, "duplicate k line");
            if (toks.size() != 2)
                throw ParseError(lineno, "malformed k line");
            k = parse_int(toks[1], lineno, "k");
            if (k < 1)
                throw ParseError(lineno, "k must be positive");
        } else if (toks[0] == "pe") {
            if (k < 0)
                throw ParseError(lineno, "edge line before k line");
            if (toks.size() != 5)
                throw ParseError(lineno, "malformed edge line");
            Cell a{parse_int(toks[1], lineno, "row"),
                   parse_int(toks[2], lineno, "column")};
            Cell b{parse_int(toks[3], lineno, "row"),
                   parse_int(toks[4], lineno, "column")};
            if (a.row < 1 || a.row > k || a.col < 1 || a.col > k ||
                b.row < 1 || b.row > k || b.col < 1 || b.col > k)
                throw ParseError(lineno, "grid coordinate out of range");
            if (a == b)
                throw ParseError(lineno, "self-pair");
            edges.emplace_back(a, b);
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (k < 0)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing k line");
    return PCInstance::create(k, edges);
}

std::string encode_witness(const DeletionSet& x) {
    std::ostringstream out;
    out << "w " << x.size() << "\n";
    for (VertexId v : x.vertices)
        out << "x " << v << "\n";
    return out.str();
}

DeletionSet decode_witness(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    int lineno = 0;
    long long declared = -1;
    DeletionSet x;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        auto toks = split_ws(line);
        if (toks.empty())
            continue;
        if (toks[0] == "w") {
            if (declared >= 0)
                throw ParseError(lineno, "duplicate size line");
            if (toks.size() != 2)
                throw ParseError(lineno, "malformed size line");
            declared = parse_ll(toks[1], lineno, "witness size");
        } else if (toks[0] == "x") {
            if (declared < 0)
                throw ParseError(lineno, "vertex line before size line");
            if (toks.size() != 2)
                throw ParseError(lineno, "malformed vertex line");
            if (!x.vertices.insert(parse_int(toks[1], lineno, "vertex id"))
                     .second)
                throw ParseError(lineno, "duplicate witness vertex");
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (declared < 0)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing size line");
    if (declared != static_cast<long long>(x.size()))
        throw ParseError(lineno, "declared size disagrees with body");
    return x;
}

std::string encode_forest(const EliminationForest& ef) {
    std::ostringstream out;
    out << "d " << ef.depth << "\n";
    for (const auto& [v, parent] : ef.parent)
        out << "t " << v << " " << parent << "\n";
    return out.str();
}

EliminationForest decode_forest(const std::string& bytes) {
    std::istringstream in(bytes);
    std::string line;
    int lineno = 0;
    bool have_depth = false;
    EliminationForest ef;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        auto toks = split_ws(line);
        if (toks.empty())
            continue;
        if (toks[0] == "d") {
            if (have_depth)
                throw ParseError(lineno, "duplicate depth line");
            if (toks.size() != 2)
                throw ParseError(lineno, "malformed depth line");
            ef.depth = parse_int(toks[1], lineno, "depth");
            have_depth = true;
        } else if (toks[0] == "t") {
            if (!have_depth)
                throw ParseError(lineno, "vertex line before depth line");
            if (toks.size() != 3)
                throw ParseError(lineno, "malformed forest line");
            VertexId v = parse_int(toks[1], lineno, "vertex id");
            VertexId parent = parse_int(toks[2], lineno, "parent id");
            if (v <= 0 || parent < 0)
                throw ParseError(lineno, "bad vertex id");
            if (!ef.parent.emplace(v, parent).second)
                throw ParseError(lineno, "duplicate forest vertex");
        } else {
            throw ParseError(lineno, "unknown line type '" + toks[0] + "'");
        }
    }
    if (!have_depth)
        throw ParseError(lineno == 0 ? 1 : lineno, "missing depth line");
    return ef;
}

}  // namespace pcvp
