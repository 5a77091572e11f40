#include "pcvp/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace pcvp {

namespace {

// Chains vertices in ascending id order below `parent`. A total chain is a
// valid elimination tree for any graph on those vertices.
int chain_all(const std::set<VertexId>& scope, VertexId parent,
              std::map<VertexId, VertexId>& out) {
    VertexId prev = parent;
    for (VertexId v : scope) {
        out[v] = prev;
        prev = v;
    }
    return static_cast<int>(scope.size());
}

std::vector<std::set<VertexId>> scope_components(const Graph& g,
                                                 const std::set<VertexId>& scope) {
    std::vector<std::set<VertexId>> comps;
    std::set<VertexId> seen;
    for (VertexId start : scope) {
        if (seen.count(start))
            continue;
        std::set<VertexId> comp;
        std::queue<VertexId> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            comp.insert(u);
            for (VertexId w : g.neighbors(u))
                if (scope.count(w) && seen.insert(w).second)
                    q.push(w);
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

// Recursive binary split of a choice-gadget component. Separating the three
// helpers of the middle backbone K5-edge together with its left endpoint
// disconnects the two halves; everything hanging off an attachment vertex
// follows its half.
int build_gadget_scope(const Graph& g, const ChoiceGadget& cg,
                       const std::set<VertexId>& scope, VertexId parent,
                       std::map<VertexId, VertexId>& out) {
    std::vector<int> bs;
    for (int j = 1; j <= cg.s; ++j)
        if (scope.count(cg.b(j)))
            bs.push_back(j);

    if (bs.size() <= 1)
        return chain_all(scope, parent, out);

    const int s_local = static_cast<int>(bs.size());
    const int j_star = bs.front() - 1 + s_local / 2;
    const VertexId a_mid = cg.a(2 * j_star);
    const auto& helpers = cg.k5_edges.at(2 * j_star).helpers;

    std::set<VertexId> separator(helpers.begin(), helpers.end());
    separator.insert(a_mid);
    for (VertexId v : separator)
        if (!scope.count(v))
            throw std::logic_error("gadget separator outside its component");

    VertexId prev = parent;
    std::vector<VertexId> sep_sorted(separator.begin(), separator.end());
    // keep the backbone vertex last so both halves hang below it
    sep_sorted.erase(std::find(sep_sorted.begin(), sep_sorted.end(), a_mid));
    sep_sorted.push_back(a_mid);
    for (VertexId v : sep_sorted) {
        out[v] = prev;
        prev = v;
    }

    std::set<VertexId> remaining;
    for (VertexId v : scope)
        if (!separator.count(v))
            remaining.insert(v);

    int deepest = 0;
    for (const auto& comp : scope_components(g, remaining))
        deepest = std::max(deepest, build_gadget_scope(g, cg, comp, a_mid, out));
    return static_cast<int>(separator.size()) + deepest;
}

}  // namespace

EliminationForest build_gadget_forest(const Graph& g, const ChoiceGadget& cg) {
    EliminationForest ef;
    std::set<VertexId> scope;
    for (VertexId v : g.vertices())
        scope.insert(v);
    ef.depth = build_gadget_scope(g, cg, scope, EliminationForest::kRoot,
                                  ef.parent);
    return ef;
}

EliminationForest build_elimination_forest(const VPInstance& vp) {
    const Manifest& m = vp.manifest;
    if (m.kind == Manifest::Kind::Gadget)
        throw std::invalid_argument(
            "elimination forest builder needs a reduced instance");

    EliminationForest ef;
    if (m.kind != Manifest::Kind::Reduced) {
        // canonical trivial instances: a single chain certifies them
        std::set<VertexId> scope;
        for (VertexId v : vp.graph.vertices())
            scope.insert(v);
        ef.depth = chain_all(scope, EliminationForest::kRoot, ef.parent);
        return ef;
    }

    // frame and apex vertices form the top chain, in manifest order
    std::vector<VertexId> top = m.frame.all_in_order();
    top.insert(top.end(), m.apex.begin(), m.apex.end());
    VertexId prev = EliminationForest::kRoot;
    for (VertexId v : top) {
        ef.parent[v] = prev;
        prev = v;
    }
    const VertexId chain_bottom = top.back();

    std::set<VertexId> deleted(top.begin(), top.end());
    Graph rest = delete_vertices(vp.graph, deleted);

    std::map<std::string, const ChoiceGadget*> by_id;
    for (const ChoiceGadget& cg : m.choice_gadgets)
        by_id[cg.id] = &cg;
    for (const auto& [pq, cg] : m.pair_gadgets)
        by_id[cg.id] = &cg;

    int deepest = 0;
    for (const auto& comp_vec : connected_components(rest)) {
        std::set<VertexId> comp(comp_vec.begin(), comp_vec.end());
        const ChoiceGadget* cg = nullptr;
        for (VertexId v : comp) {
            const Role& r = vp.graph.role(v);
            if (r.tag == RoleTag::ChoiceA) {
                cg = by_id.at(r.scope);
                break;
            }
        }
        if (!cg)
            throw std::logic_error("component without a choice gadget");
        deepest = std::max(deepest, build_gadget_scope(vp.graph, *cg, comp,
                                                       chain_bottom, ef.parent));
    }
    ef.depth = static_cast<int>(top.size()) + deepest;
    return ef;
}

bool validate_elimination_forest(const Graph& g, const EliminationForest& ef) {
    std::vector<VertexId> vs = g.vertices();
    if (vs.size() != ef.parent.size())
        throw std::invalid_argument("forest does not cover the vertex set");
    for (VertexId v : vs)
        if (!ef.parent.count(v))
            throw std::invalid_argument("forest does not cover the vertex set");

    // resolve depths, detecting cycles and dangling parents
    std::map<VertexId, int> depth;
    for (VertexId v : vs) {
        if (depth.count(v))
            continue;
        std::vector<VertexId> trail;
        VertexId cur = v;
        int base = -1;
        for (;;) {
            if (cur == EliminationForest::kRoot) {
                base = 0;
                break;
            }
            auto it = depth.find(cur);
            if (it != depth.end()) {
                base = it->second;
                break;
            }
            if (std::find(trail.begin(), trail.end(), cur) != trail.end())
                return false;  // cycle
            if (!ef.parent.count(cur))
                return false;  // parent outside the forest
            trail.push_back(cur);
            cur = ef.parent.at(cur);
        }
        for (auto it = trail.rbegin(); it != trail.rend(); ++it)
            depth[*it] = ++base;
    }

    int measured = 0;
    for (const auto& [v, d] : depth)
        measured = std::max(measured, d);
    if (measured != ef.depth)
        return false;

    auto is_ancestor = [&](VertexId anc, VertexId v) {
        VertexId cur = v;
        while (depth.at(cur) > depth.at(anc))
            cur = ef.parent.at(cur);
        return cur == anc;
    };
    for (const auto& [u, v] : g.edges()) {
        VertexId hi = depth[u] <= depth[v] ? u : v;
        VertexId lo = hi == u ? v : u;
        if (!is_ancestor(hi, lo))
            return false;
    }
    return true;
}

namespace {

struct TreedepthSolver {
    std::vector<std::uint32_t> adj;
    std::unordered_map<std::uint32_t, int> memo;

    std::vector<std::uint32_t> components(std::uint32_t mask) const {
        std::vector<std::uint32_t> comps;
        std::uint32_t left = mask;
        while (left) {
            int v = std::countr_zero(left);
            std::uint32_t comp = 0, frontier = std::uint32_t(1) << v;
            while (frontier) {
                comp |= frontier;
                std::uint32_t next = 0;
                std::uint32_t f = frontier;
                while (f) {
                    int u = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj[u] & mask & ~comp;
                }
                frontier = next;
            }
            comps.push_back(comp);
            left &= ~comp;
        }
        return comps;
    }

    int depth_of(std::uint32_t mask) {
        if (!mask)
            return 0;
        int best = 0;
        for (std::uint32_t comp : components(mask))
            best = std::max(best, depth_connected(comp));
        return best;
    }

    int depth_connected(std::uint32_t mask) {
        if (std::popcount(mask) == 1)
            return 1;
        auto it = memo.find(mask);
        if (it != memo.end())
            return it->second;
        int best = std::popcount(mask);
        std::uint32_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            best = std::min(best, 1 + depth_of(mask & ~(std::uint32_t(1) << v)));
        }
        memo.emplace(mask, best);
        return best;
    }

    // lexicographically-first vertex whose removal is optimal
    int best_root(std::uint32_t mask) {
        int target = depth_connected(mask);
        std::uint32_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (1 + depth_of(mask & ~(std::uint32_t(1) << v)) == target)
                return v;
        }
        throw std::logic_error("no optimal root found");
    }
};

TreedepthSolver make_solver(const Graph& g, std::size_t max_vertices,
                            std::vector<VertexId>& ids) {
    if (max_vertices > 16)
        throw std::invalid_argument("treedepth oracle is limited to 16 vertices");
    if (g.vertex_count() > max_vertices)
        throw std::invalid_argument("input too large for the treedepth oracle");
    ids = g.vertices();
    std::map<VertexId, int> pos;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        pos[ids[i]] = i;
    TreedepthSolver solver;
    solver.adj.assign(ids.size(), 0);
    for (const auto& [u, v] : g.edges()) {
        solver.adj[pos[u]] |= std::uint32_t(1) << pos[v];
        solver.adj[pos[v]] |= std::uint32_t(1) << pos[u];
    }
    return solver;
}

}  // namespace

int exact_treedepth_small(const Graph& g, std::size_t max_vertices) {
    std::vector<VertexId> ids;
    TreedepthSolver solver = make_solver(g, max_vertices, ids);
    if (ids.empty())
        return 0;
    return solver.depth_of((std::uint32_t(1) << ids.size()) - 1);
}

EliminationForest exact_treedepth_forest(const Graph& g,
                                         std::size_t max_vertices) {
    std::vector<VertexId> ids;
    TreedepthSolver solver = make_solver(g, max_vertices, ids);
    EliminationForest ef;
    if (ids.empty())
        return ef;
    std::uint32_t full = (std::uint32_t(1) << ids.size()) - 1;
    ef.depth = solver.depth_of(full);

    std::function<void(std::uint32_t, VertexId)> build =
        [&](std::uint32_t mask, VertexId parent) {
            for (std::uint32_t comp : solver.components(mask)) {
                if (std::popcount(comp) == 1) {
                    ef.parent[ids[std::countr_zero(comp)]] = parent;
                    continue;
                }
                int v = solver.best_root(comp);
                ef.parent[ids[v]] = parent;
                build(comp & ~(std::uint32_t(1) << v), ids[v]);
            }
        };
    build(full, EliminationForest::kRoot);
    return ef;
}

}  // namespace pcvp
