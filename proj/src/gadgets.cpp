#include "pcvp/gadgets.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pcvp/planarity.hpp"

namespace pcvp {

std::vector<VertexId> ChoiceGadget::helper_ids() const {
    std::vector<VertexId> out;
    out.reserve(k5_edges.size() * 3);
    for (const auto& e : k5_edges)
        out.insert(out.end(), e.helpers.begin(), e.helpers.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::array<VertexId, 3> introduce_k5_edge(Graph& g, VertexId x, VertexId y,
                                          const std::string& k5_id) {
    if (x == y)
        throw std::invalid_argument("K5-edge endpoints must differ");
    if (!g.has_vertex(x) || !g.has_vertex(y))
        throw std::invalid_argument("vertex not present");
    std::array<VertexId, 3> z;
    for (int slot = 1; slot <= 3; ++slot)
        z[slot - 1] = g.add_vertex(Role{RoleTag::K5Helper, k5_id, slot, 0, 0});
    g.add_edge(x, y);
    for (int i = 0; i < 3; ++i) {
        g.add_edge(x, z[i]);
        g.add_edge(y, z[i]);
        for (int j = i + 1; j < 3; ++j)
            g.add_edge(z[i], z[j]);
    }
    return z;
}

std::pair<Graph, ChoiceGadget> build_choice_gadget(int s,
                                                   const std::string& id) {
    if (s < 1)
        throw std::invalid_argument("choice gadget needs s >= 1");
    Graph g;
    ChoiceGadget cg;
    cg.s = s;
    cg.id = id;
    for (int t = 0; t <= 2 * s + 1; ++t)
        cg.a_ids.push_back(g.add_vertex(Role{RoleTag::ChoiceA, id, t, 0, 0}));
    for (int j = 1; j <= s; ++j)
        cg.b_ids.push_back(g.add_vertex(Role{RoleTag::ChoiceB, id, j, 0, 0}));

    auto add_k5 = [&](VertexId x, VertexId y) {
        int t = static_cast<int>(cg.k5_edges.size());
        auto z = introduce_k5_edge(g, x, y,
                                   id + ".k5." + std::to_string(t));
        cg.k5_edges.push_back({x, y, z});
    };
    for (int t = 0; t < 2 * s + 1; ++t)
        add_k5(cg.a(t), cg.a(t + 1));
    for (int j = 1; j <= s; ++j) {
        add_k5(cg.b(j), cg.a(2 * j - 1));
        add_k5(cg.b(j), cg.a(2 * j));
    }
    return {std::move(g), std::move(cg)};
}

DeletionSet canonical_choice_solution(const ChoiceGadget& cg, int j) {
    if (j < 1 || j > cg.s)
        throw std::invalid_argument("choice index out of range");
    DeletionSet out;
    for (int jp = 1; jp <= cg.s; ++jp)
        if (jp != j)
            out.vertices.insert(cg.b(jp));
    for (int jp = 1; jp <= j; ++jp)
        out.vertices.insert(cg.a(2 * jp - 1));
    for (int jp = j; jp <= cg.s; ++jp)
        out.vertices.insert(cg.a(2 * jp));
    return out;
}

std::vector<DeletionSet> enumerate_min_choice_solutions(const Graph& g,
                                                        const ChoiceGadget& cg,
                                                        int max_s) {
    if (cg.s > max_s)
        throw std::invalid_argument("gadget size above enumeration cutoff");

    std::vector<VertexId> base(cg.a_ids);
    base.insert(base.end(), cg.b_ids.begin(), cg.b_ids.end());
    std::sort(base.begin(), base.end());
    const int n = static_cast<int>(base.size());
    const int pick = 2 * cg.s;

    std::vector<DeletionSet> out;
    std::vector<int> idx(pick);
    for (int i = 0; i < pick; ++i)
        idx[i] = i;
    for (;;) {
        DeletionSet cand;
        for (int i : idx)
            cand.vertices.insert(base[i]);
        if (is_planar(delete_vertices(g, cand.vertices)))
            out.push_back(std::move(cand));
        int i = pick - 1;
        while (i >= 0 && idx[i] == n - pick + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int t = i + 1; t < pick; ++t)
            idx[t] = idx[t - 1] + 1;
    }
    return out;
}

const std::vector<ChoiceSolutionPattern>& min_choice_solution_patterns(int s) {
    static std::map<int, std::vector<ChoiceSolutionPattern>> cache;
    auto it = cache.find(s);
    if (it != cache.end())
        return it->second;

    auto [g, cg] = build_choice_gadget(s);
    std::map<VertexId, std::pair<char, int>> pos;  // id -> ('a', t) or ('b', j)
    for (int t = 0; t <= 2 * s + 1; ++t)
        pos[cg.a(t)] = {'a', t};
    for (int j = 1; j <= s; ++j)
        pos[cg.b(j)] = {'b', j};

    std::vector<ChoiceSolutionPattern> patterns;
    for (const auto& sol : enumerate_min_choice_solutions(g, cg)) {
        ChoiceSolutionPattern p;
        for (VertexId v : sol.vertices) {
            auto [kind, index] = pos.at(v);
            if (kind == 'a')
                p.deleted_a.push_back(index);
            else
                p.deleted_b.push_back(index);
        }
        std::sort(p.deleted_a.begin(), p.deleted_a.end());
        std::sort(p.deleted_b.begin(), p.deleted_b.end());
        for (int j = 1; j <= s; ++j)
            if (!std::binary_search(p.deleted_b.begin(), p.deleted_b.end(), j))
                p.surviving_b.push_back(j);
        patterns.push_back(std::move(p));
    }
    return cache.emplace(s, std::move(patterns)).first->second;
}

}  // namespace pcvp
