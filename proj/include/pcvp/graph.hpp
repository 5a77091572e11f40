#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace pcvp {

// Vertex identifiers are dense positive integers, assigned in construction
// order and never reused within one instance's lifetime. Keeping them
// 1-based leaves 0 free as the root marker in elimination-forest files.
using VertexId = int;

enum class RoleTag {
    FrameV,     // frame path vertex: cycle-ladder side L/R, or ladder alpha
    FrameU,     // frame partner path vertex
    Apex,       // apex vertex x^beta
    Link,       // wiring vertex y_i^{alpha,beta}
    ChoiceA,    // choice-gadget backbone vertex a_t
    ChoiceB,    // choice-gadget attachment vertex b_j (standalone gadgets only)
    K5Helper,   // one of the three helpers of a K5-edge
    EdgeLeft,   // grid-edge gadget vertex adjacent to the frame row of p
    EdgeMid,    // grid-edge gadget middle vertex
    EdgeRight,  // grid-edge gadget vertex adjacent to the frame row of q
    Plain,
};

// Tagged role attached to every vertex. `scope` carries the owning
// structure's identity (frame section, gadget id, K5-edge id, grid-edge id);
// a/b/c are tag-specific indices:
//   FrameV/FrameU: scope = "L"|"R"|alpha, a = path index
//   Apex:          a = beta
//   Link:          a = i, b = alpha, c = beta
//   ChoiceA:       scope = gadget id, a = backbone index t
//   ChoiceB:       scope = gadget id, a = attachment index j
//   K5Helper:      scope = K5-edge id, a = slot in 1..3
//   EdgeLeft/Mid/Right: scope = grid-edge id "p.gamma.q.delta"
struct Role {
    RoleTag tag = RoleTag::Plain;
    std::string scope;
    int a = 0;
    int b = 0;
    int c = 0;

    bool operator==(const Role&) const = default;
};

// Undirected simple graph with stable vertex ids and role labels.
// Mutating calls (add_vertex / add_edge) are the builder stage; every
// algorithm in this library takes the graph by const reference and treats
// it as an immutable value.
class Graph {
public:
    Graph() = default;

    // Adds a fresh vertex with the next unused id.
    VertexId add_vertex(Role role = {});
    // Adds a vertex with an explicit id (decode path). Throws if taken.
    void add_vertex_with_id(VertexId v, Role role = {});
    // Idempotent; throws on self-loops and unknown endpoints.
    void add_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const;

    const Role& role(VertexId v) const;
    void set_role(VertexId v, Role r);

    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    std::vector<VertexId> vertices() const;                       // ascending
    std::vector<std::pair<VertexId, VertexId>> edges() const;     // u < v, sorted
    const std::vector<VertexId>& neighbors(VertexId v) const;     // ascending

    const std::map<VertexId, std::vector<VertexId>>& adjacency() const {
        return adj_;
    }

    // Structural + role equality. Ignores the id allocator position.
    bool operator==(const Graph& other) const;

private:
    std::map<VertexId, std::vector<VertexId>> adj_;
    std::map<VertexId, Role> roles_;
    std::size_t edge_count_ = 0;
    VertexId next_id_ = 1;
};

// Induced subgraph on vertices(g) \ xs. Throws "vertex not present" if xs
// names an unknown vertex. The input graph is left untouched.
Graph delete_vertices(const Graph& g, const std::set<VertexId>& xs);

// Maximal connected vertex sets, each sorted ascending, ordered by their
// smallest member.
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

// Size of a global minimum edge cut, computed as the minimum over s-t
// max-flows from a fixed vertex to every other vertex. Requires a connected
// graph with at least two vertices.
int min_edge_cut(const Graph& g);

}  // namespace pcvp
