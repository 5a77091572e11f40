#include "pcvp/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace pcvp {

VertexId Graph::add_vertex(Role role) {
    VertexId v = next_id_++;
    adj_.emplace(v, std::vector<VertexId>{});
    roles_.emplace(v, std::move(role));
    return v;
}

void Graph::add_vertex_with_id(VertexId v, Role role) {
    if (v <= 0)
        throw std::invalid_argument("vertex ids must be positive");
    if (adj_.count(v))
        throw std::invalid_argument("vertex id already present");
    adj_.emplace(v, std::vector<VertexId>{});
    roles_.emplace(v, std::move(role));
    next_id_ = std::max(next_id_, v + 1);
}

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v)
        throw std::invalid_argument("self-loops are not allowed");
    auto iu = adj_.find(u);
    auto iv = adj_.find(v);
    if (iu == adj_.end() || iv == adj_.end())
        throw std::invalid_argument("vertex not present");
    auto& nu = iu->second;
    auto pos = std::lower_bound(nu.begin(), nu.end(), v);
    if (pos != nu.end() && *pos == v)
        return;  // duplicate edges are idempotent
    nu.insert(pos, v);
    auto& nv = iv->second;
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

bool Graph::has_vertex(VertexId v) const { return adj_.count(v) != 0; }

bool Graph::has_edge(VertexId u, VertexId v) const {
    auto it = adj_.find(u);
    if (it == adj_.end())
        return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

const Role& Graph::role(VertexId v) const {
    auto it = roles_.find(v);
    if (it == roles_.end())
        throw std::invalid_argument("vertex not present");
    return it->second;
}

void Graph::set_role(VertexId v, Role r) {
    auto it = roles_.find(v);
    if (it == roles_.end())
        throw std::invalid_argument("vertex not present");
    it->second = std::move(r);
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_)
        out.push_back(v);
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (const auto& [u, nbrs] : adj_)
        for (VertexId v : nbrs)
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw std::invalid_argument("vertex not present");
    return it->second;
}

bool Graph::operator==(const Graph& other) const {
    return adj_ == other.adj_ && roles_ == other.roles_;
}

Graph delete_vertices(const Graph& g, const std::set<VertexId>& xs) {
    for (VertexId v : xs)
        if (!g.has_vertex(v))
            throw std::invalid_argument("vertex not present");
    Graph out;
    for (const auto& [v, _] : g.adjacency())
        if (!xs.count(v))
            out.add_vertex_with_id(v, g.role(v));
    for (const auto& [u, nbrs] : g.adjacency()) {
        if (xs.count(u))
            continue;
        for (VertexId v : nbrs)
            if (u < v && !xs.count(v))
                out.add_edge(u, v);
    }
    return out;
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::set<VertexId> seen;
    for (const auto& [start, _] : g.adjacency()) {
        if (seen.count(start))
            continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> queue;
        queue.push(start);
        seen.insert(start);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop();
            comp.push_back(u);
            for (VertexId w : g.neighbors(u))
                if (seen.insert(w).second)
                    queue.push(w);
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    // map iteration starts components at their smallest vertex already,
    // but make the ordering contract explicit
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

namespace {

// Unit-capacity max flow (BFS augmenting paths). Small graphs only.
struct FlowNet {
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowNet(int n) : arcs(n) {}

    void add_undirected(int u, int v) {
        arcs[u].push_back({v, static_cast<int>(arcs[v].size()), 1});
        arcs[v].push_back({u, static_cast<int>(arcs[u].size()) - 1, 1});
    }

    int max_flow(int s, int t) {
        int total = 0;
        for (;;) {
            std::vector<int> prev_node(arcs.size(), -1), prev_arc(arcs.size(), -1);
            std::queue<int> q;
            q.push(s);
            prev_node[s] = s;
            while (!q.empty() && prev_node[t] < 0) {
                int u = q.front();
                q.pop();
                for (int i = 0; i < static_cast<int>(arcs[u].size()); ++i) {
                    const Arc& a = arcs[u][i];
                    if (a.cap > 0 && prev_node[a.to] < 0) {
                        prev_node[a.to] = u;
                        prev_arc[a.to] = i;
                        q.push(a.to);
                    }
                }
            }
            if (prev_node[t] < 0)
                return total;
            for (int v = t; v != s; v = prev_node[v]) {
                Arc& a = arcs[prev_node[v]][prev_arc[v]];
                a.cap -= 1;
                arcs[v][a.rev].cap += 1;
            }
            ++total;
        }
    }
};

}  // namespace

int min_edge_cut(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("min_edge_cut needs at least two vertices");
    if (connected_components(g).size() != 1)
        throw std::invalid_argument("min_edge_cut needs a connected graph");

    std::vector<VertexId> ids = g.vertices();
    std::map<VertexId, int> index;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
        index[ids[i]] = i;

    int best = -1;
    for (int t = 1; t < static_cast<int>(ids.size()); ++t) {
        FlowNet net(static_cast<int>(ids.size()));
        for (const auto& [u, v] : g.edges())
            net.add_undirected(index[u], index[v]);
        int f = net.max_flow(0, t);
        if (best < 0 || f < best)
            best = f;
    }
    return best;
}

}  // namespace pcvp
