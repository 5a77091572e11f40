#include "pcvp/planarity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace pcvp {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const std::vector<std::pair<int, int>>& edges, int n) {
    BoostGraph bg(n);
    int ei = 0;
    for (const auto& [u, v] : edges)
        boost::add_edge(u, v, ei++, bg);
    return bg;
}

struct CompactIndex {
    std::vector<VertexId> ids;          // position -> VertexId
    std::map<VertexId, int> position;   // VertexId -> position

    explicit CompactIndex(const Graph& g) : ids(g.vertices()) {
        for (int i = 0; i < static_cast<int>(ids.size()); ++i)
            position[ids[i]] = i;
    }
};

std::vector<std::pair<int, int>> compact_edges(const Graph& g,
                                               const CompactIndex& ix) {
    std::vector<std::pair<int, int>> out;
    out.reserve(g.edge_count());
    for (const auto& [u, v] : g.edges())
        out.emplace_back(ix.position.at(u), ix.position.at(v));
    return out;
}

}  // namespace

std::set<VertexId> KuratowskiWitness::all_vertices() const {
    std::set<VertexId> out(branch_vertices);
    for (const auto& p : paths)
        out.insert(p.begin(), p.end());
    return out;
}

bool is_planar_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 4)
        return true;
    // Euler bound: cheap reject before running the full test.
    if (edges.size() > 3 * static_cast<std::size_t>(n) - 6)
        return false;
    BoostGraph bg = to_boost(edges, n);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool is_planar(const Graph& g) {
    CompactIndex ix(g);
    return is_planar_edge_list(static_cast<int>(ix.ids.size()),
                               compact_edges(g, ix));
}

namespace {

// Checks that the edge set forms an exact subdivision of K5 or K3,3 and, if
// so, reports the branch degree (4 or 3).
bool is_strict_subdivision(const std::map<VertexId, std::set<VertexId>>& adj,
                           int& branch_degree) {
    int deg3 = 0, deg4 = 0;
    for (const auto& [v, nbrs] : adj) {
        switch (nbrs.size()) {
        case 2:
            break;
        case 3:
            ++deg3;
            break;
        case 4:
            ++deg4;
            break;
        default:
            return false;
        }
    }
    if (deg4 == 5 && deg3 == 0) {
        branch_degree = 4;
        return true;
    }
    if (deg3 == 6 && deg4 == 0) {
        branch_degree = 3;
        return true;
    }
    return false;
}

std::map<VertexId, std::set<VertexId>> edge_set_adjacency(
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::map<VertexId, std::set<VertexId>> adj;
    for (const auto& [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

bool edge_list_nonplanar(const std::vector<std::pair<VertexId, VertexId>>& edges) {
    std::map<VertexId, int> pos;
    for (const auto& [u, v] : edges) {
        pos.emplace(u, 0);
        pos.emplace(v, 0);
    }
    int n = 0;
    for (auto& [_, p] : pos)
        p = n++;
    std::vector<std::pair<int, int>> ce;
    ce.reserve(edges.size());
    for (const auto& [u, v] : edges)
        ce.emplace_back(pos[u], pos[v]);
    return !is_planar_edge_list(n, ce);
}

}  // namespace

std::optional<KuratowskiWitness> find_kuratowski_witness(const Graph& g) {
    CompactIndex ix(g);
    auto edges = compact_edges(g, ix);
    const int n = static_cast<int>(ix.ids.size());
    BoostGraph bg = to_boost(edges, n);

    std::vector<boost::graph_traits<BoostGraph>::edge_descriptor> kur;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::kuratowski_subgraph =
            std::back_inserter(kur));
    if (planar)
        return std::nullopt;

    std::vector<std::pair<VertexId, VertexId>> sub;
    sub.reserve(kur.size());
    for (auto e : kur) {
        VertexId u = ix.ids[boost::source(e, bg)];
        VertexId v = ix.ids[boost::target(e, bg)];
        sub.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());

    auto adj = edge_set_adjacency(sub);
    int branch_degree = 0;
    if (!is_strict_subdivision(adj, branch_degree)) {
        // Minimalize: drop every edge whose removal keeps the set nonplanar.
        // A minimal nonplanar edge set is an exact Kuratowski subdivision.
        for (std::size_t i = 0; i < sub.size();) {
            std::vector<std::pair<VertexId, VertexId>> trial(sub);
            trial.erase(trial.begin() + static_cast<long>(i));
            if (edge_list_nonplanar(trial))
                sub = std::move(trial);
            else
                ++i;
        }
        adj = edge_set_adjacency(sub);
        if (!is_strict_subdivision(adj, branch_degree))
            throw std::logic_error("obstruction extraction failed");
    }

    KuratowskiWitness w;
    w.kind = branch_degree == 4 ? KuratowskiKind::K5 : KuratowskiKind::K33;
    for (const auto& [v, nbrs] : adj)
        if (static_cast<int>(nbrs.size()) == branch_degree)
            w.branch_vertices.insert(v);

    // Walk from each branch vertex through degree-2 chains; record each
    // path once, from its smaller endpoint.
    std::set<std::pair<VertexId, VertexId>> used;
    for (VertexId b : w.branch_vertices) {
        for (VertexId first : adj[b]) {
            if (used.count({b, first}))
                continue;
            std::vector<VertexId> path{b};
            VertexId prev = b, cur = first;
            used.insert({b, first});
            while (!w.branch_vertices.count(cur)) {
                path.push_back(cur);
                const auto& nb = adj[cur];
                if (nb.size() != 2)
                    throw std::logic_error("obstruction path walk failed");
                VertexId nxt = (*nb.begin() == prev) ? *std::next(nb.begin())
                                                     : *nb.begin();
                prev = cur;
                cur = nxt;
            }
            path.push_back(cur);
            used.insert({cur, prev});
            w.paths.push_back(std::move(path));
        }
    }

    if (!validate_kuratowski_witness(g, w))
        throw std::logic_error("extracted obstruction failed validation");
    return w;
}

bool validate_kuratowski_witness(const Graph& g, const KuratowskiWitness& w) {
    const std::size_t want_branches = w.kind == KuratowskiKind::K5 ? 5 : 6;
    const std::size_t want_paths = w.kind == KuratowskiKind::K5 ? 10 : 9;
    if (w.branch_vertices.size() != want_branches ||
        w.paths.size() != want_paths)
        return false;
    for (VertexId b : w.branch_vertices)
        if (!g.has_vertex(b))
            return false;

    std::set<VertexId> internals_seen;
    std::map<std::pair<VertexId, VertexId>, int> pair_count;
    for (const auto& path : w.paths) {
        if (path.size() < 2)
            return false;
        if (!w.branch_vertices.count(path.front()) ||
            !w.branch_vertices.count(path.back()))
            return false;
        if (path.front() == path.back())
            return false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (!g.has_edge(path[i], path[i + 1]))
                return false;
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            VertexId inner = path[i];
            if (w.branch_vertices.count(inner))
                return false;
            if (!internals_seen.insert(inner).second)
                return false;  // paths must be internally disjoint
        }
        VertexId a = std::min(path.front(), path.back());
        VertexId b = std::max(path.front(), path.back());
        if (++pair_count[{a, b}] > 1)
            return false;
    }

    std::vector<VertexId> branches(w.branch_vertices.begin(),
                                   w.branch_vertices.end());
    auto linked = [&](VertexId a, VertexId b) {
        return pair_count.count({std::min(a, b), std::max(a, b)}) != 0;
    };
    if (w.kind == KuratowskiKind::K5) {
        for (std::size_t i = 0; i < branches.size(); ++i)
            for (std::size_t j = i + 1; j < branches.size(); ++j)
                if (!linked(branches[i], branches[j]))
                    return false;
        return true;
    }
    // K3,3: recover the bipartition from non-adjacency.
    std::vector<VertexId> side_a{branches[0]};
    std::vector<VertexId> side_b;
    for (std::size_t i = 1; i < branches.size(); ++i) {
        if (linked(branches[0], branches[i]))
            side_b.push_back(branches[i]);
        else
            side_a.push_back(branches[i]);
    }
    if (side_a.size() != 3 || side_b.size() != 3)
        return false;
    for (VertexId a : side_a)
        for (VertexId b : side_b)
            if (!linked(a, b))
                return false;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            if (linked(side_a[i], side_a[j]) || linked(side_b[i], side_b[j]))
                return false;
    return true;
}

bool validate_k33_minor_model(const Graph& g, const MinorModel& mm) {
    std::set<VertexId> all;
    for (const auto& bs : mm.branch_sets) {
        if (bs.empty())
            return false;
        for (VertexId v : bs) {
            if (!g.has_vertex(v))
                return false;
            if (!all.insert(v).second)
                return false;  // overlap
        }
    }
    // Each branch set must induce a connected subgraph.
    for (const auto& bs : mm.branch_sets) {
        std::set<VertexId> seen;
        std::queue<VertexId> q;
        q.push(*bs.begin());
        seen.insert(*bs.begin());
        while (!q.empty()) {
            VertexId u = q.front();
            q.pop();
            for (VertexId w : g.neighbors(u))
                if (bs.count(w) && seen.insert(w).second)
                    q.push(w);
        }
        if (seen.size() != bs.size())
            return false;
    }
    // Every cross pair needs a host edge.
    for (int i = 0; i < 3; ++i) {
        for (int j = 3; j < 6; ++j) {
            bool found = false;
            for (VertexId u : mm.branch_sets[i]) {
                for (VertexId v : mm.branch_sets[j]) {
                    if (g.has_edge(u, v)) {
                        found = true;
                        break;
                    }
                }
                if (found)
                    break;
            }
            if (!found)
                return false;
        }
    }
    return true;
}

namespace {

// --- exhaustive minor search ------------------------------------------
//
// State: adjacency rows over at most 16 slots, compacted after every
// contraction. The search asks one question: does the current graph contain
// K5 or K3,3 as a minor? A minor model with a non-singleton branch set
// survives contracting a spanning-tree edge of that set, so contraction
// branching with a subgraph base case is exhaustive.

using Rows = std::vector<std::uint16_t>;

int popcount16(std::uint16_t x) { return std::popcount(x); }

// Degree-based relabeling. Not a full canonical form, just a cheap
// normalization so that equal minors reached along different branches
// usually share a memo entry. Soundness only needs the key to be a
// relabeling of the state.
Rows normalize(const Rows& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<std::pair<std::uint64_t, int>> keys(n);
    for (int v = 0; v < n; ++v)
        keys[v] = {static_cast<std::uint64_t>(popcount16(rows[v])), v};
    for (int round = 0; round < 2; ++round) {
        std::vector<std::pair<std::uint64_t, int>> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<std::uint64_t> nk;
            for (int u = 0; u < n; ++u)
                if (rows[v] & (std::uint16_t(1) << u))
                    nk.push_back(keys[u].first);
            std::sort(nk.begin(), nk.end());
            std::uint64_t h = keys[v].first;
            for (std::uint64_t x : nk)
                h = h * 1000003u + x + 1;
            next[v] = {h, v};
        }
        keys = std::move(next);
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return keys[a] < keys[b];
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i)
        pos[order[i]] = i;
    Rows out(n, 0);
    for (int i = 0; i < n; ++i) {
        std::uint16_t row = rows[order[i]];
        std::uint16_t mapped = 0;
        for (int u = 0; u < n; ++u)
            if (row & (std::uint16_t(1) << u))
                mapped |= std::uint16_t(1) << pos[u];
        out[i] = mapped;
    }
    return out;
}

Rows drop_vertex(const Rows& rows, int victim) {
    const int n = static_cast<int>(rows.size());
    Rows out;
    out.reserve(n - 1);
    for (int v = 0; v < n; ++v) {
        if (v == victim)
            continue;
        std::uint16_t row = rows[v];
        std::uint16_t lo = row & static_cast<std::uint16_t>((1u << victim) - 1);
        std::uint16_t hi = static_cast<std::uint16_t>(
            (row >> (victim + 1)) << victim);
        out.push_back(lo | hi);
    }
    return out;
}

// Removes degree <= 1 vertices and suppresses degree-2 vertices. Both
// preserve the existence of K5/K3,3 minors (their minimum degree is 3).
Rows reduce(Rows rows) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < static_cast<int>(rows.size()); ++v) {
            int d = popcount16(rows[v]);
            if (d <= 1) {
                std::uint16_t row = rows[v];
                for (int u = 0; u < static_cast<int>(rows.size()); ++u)
                    if (row & (std::uint16_t(1) << u))
                        rows[u] &= static_cast<std::uint16_t>(
                            ~(std::uint16_t(1) << v));
                rows = drop_vertex(rows, v);
                changed = true;
                break;
            }
            if (d == 2) {
                int x = std::countr_zero(rows[v]);
                int y = 15 - std::countl_zero(
                                 static_cast<std::uint16_t>(rows[v]));
                rows[x] |= std::uint16_t(1) << y;
                rows[y] |= std::uint16_t(1) << x;
                rows[x] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << v));
                rows[y] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << v));
                rows = drop_vertex(rows, v);
                changed = true;
                break;
            }
        }
    }
    return rows;
}

bool has_k5_subgraph(const Rows& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (popcount16(rows[v]) >= 4)
            cand.push_back(v);
    const int c = static_cast<int>(cand.size());
    if (c < 5)
        return false;
    for (int a = 0; a < c; ++a)
        for (int b = a + 1; b < c; ++b) {
            if (!(rows[cand[a]] & (std::uint16_t(1) << cand[b])))
                continue;
            for (int d = b + 1; d < c; ++d) {
                std::uint16_t need_abd = std::uint16_t(1) << cand[d];
                if (!(rows[cand[a]] & need_abd) || !(rows[cand[b]] & need_abd))
                    continue;
                for (int e = d + 1; e < c; ++e) {
                    std::uint16_t be = std::uint16_t(1) << cand[e];
                    if (!(rows[cand[a]] & be) || !(rows[cand[b]] & be) ||
                        !(rows[cand[d]] & be))
                        continue;
                    for (int f = e + 1; f < c; ++f) {
                        std::uint16_t bf = std::uint16_t(1) << cand[f];
                        if ((rows[cand[a]] & bf) && (rows[cand[b]] & bf) &&
                            (rows[cand[d]] & bf) && (rows[cand[e]] & bf))
                            return true;
                    }
                }
            }
        }
    return false;
}

bool has_k33_subgraph(const Rows& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (popcount16(rows[v]) >= 3)
            cand.push_back(v);
    const int c = static_cast<int>(cand.size());
    if (c < 6)
        return false;
    std::vector<int> pick(6);
    // enumerate 6-subsets of the candidates
    std::vector<int> idx{0, 1, 2, 3, 4, 5};
    for (;;) {
        for (int i = 0; i < 6; ++i)
            pick[i] = cand[idx[i]];
        // first element sits in side A; choose its two side companions
        for (int i = 1; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                std::uint16_t a_mask = std::uint16_t(1) << pick[0];
                a_mask |= std::uint16_t(1) << pick[i];
                a_mask |= std::uint16_t(1) << pick[j];
                std::uint16_t b_mask = 0;
                for (int t = 1; t < 6; ++t)
                    if (t != i && t != j)
                        b_mask |= std::uint16_t(1) << pick[t];
                bool ok = true;
                for (int t = 0; t < 6 && ok; ++t) {
                    std::uint16_t bit = std::uint16_t(1) << pick[t];
                    if (a_mask & bit)
                        ok = (rows[pick[t]] & b_mask) == b_mask;
                }
                if (ok)
                    return true;
            }
        // next combination
        int i = 5;
        while (i >= 0 && idx[i] == c - 6 + i)
            --i;
        if (i < 0)
            break;
        ++idx[i];
        for (int t = i + 1; t < 6; ++t)
            idx[t] = idx[t - 1] + 1;
    }
    return false;
}

Rows contract(const Rows& rows, int u, int v) {
    // merge v into u
    Rows out(rows);
    out[u] |= out[v];
    out[u] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << u));
    out[u] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << v));
    for (int t = 0; t < static_cast<int>(out.size()); ++t) {
        if (t == u || t == v)
            continue;
        if (out[t] & (std::uint16_t(1) << v)) {
            out[t] &= static_cast<std::uint16_t>(~(std::uint16_t(1) << v));
            out[t] |= std::uint16_t(1) << u;
        }
    }
    std::uint16_t urow = out[u];
    for (int t = 0; t < static_cast<int>(out.size()); ++t)
        if (urow & (std::uint16_t(1) << t))
            out[t] |= std::uint16_t(1) << u;
    out[v] = 0;
    return drop_vertex(out, v);
}

bool has_forbidden_minor(Rows rows, std::map<Rows, bool>& memo) {
    rows = reduce(std::move(rows));
    if (rows.size() < 5)
        return false;
    Rows key = normalize(rows);
    auto it = memo.find(key);
    if (it != memo.end())
        return it->second;
    bool result = has_k5_subgraph(rows) || has_k33_subgraph(rows);
    if (!result) {
        const int n = static_cast<int>(rows.size());
        for (int u = 0; u < n && !result; ++u)
            for (int v = u + 1; v < n && !result; ++v)
                if (rows[u] & (std::uint16_t(1) << v))
                    result = has_forbidden_minor(contract(rows, u, v), memo);
    }
    memo.emplace(std::move(key), result);
    return result;
}

}  // namespace

bool planarity_small_oracle(const Graph& g, std::size_t max_vertices) {
    if (max_vertices > 16)
        throw std::invalid_argument("oracle cutoff is limited to 16 vertices");
    if (g.vertex_count() > max_vertices)
        throw std::invalid_argument("input too large for the small oracle");
    CompactIndex ix(g);
    Rows rows(ix.ids.size(), 0);
    for (const auto& [u, v] : g.edges()) {
        int a = ix.position.at(u), b = ix.position.at(v);
        rows[a] |= std::uint16_t(1) << b;
        rows[b] |= std::uint16_t(1) << a;
    }
    std::map<Rows, bool> memo;
    return !has_forbidden_minor(std::move(rows), memo);
}

}  // namespace pcvp
