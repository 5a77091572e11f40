#pragma once

#include <array>
#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcvp/gadgets.hpp"
#include "pcvp/graph.hpp"

namespace pcvp {

// A cell of the k x k grid, 1-based.
struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

// Permutation-clique input: a graph on the k x k grid. Edges are stored
// with the lesser endpoint first.
struct PCInstance {
    int k = 0;
    std::set<std::pair<Cell, Cell>> edges;

    // Validates coordinates and rejects self-pairs.
    static PCInstance create(int k,
                             const std::vector<std::pair<Cell, Cell>>& edges);

    bool has_edge(Cell a, Cell b) const;
    bool operator==(const PCInstance&) const = default;
};

// A retained cross-row grid edge (p, gamma) -- (q, delta) with p < q.
// Default comparison sorts by (p, q, gamma, delta), which fixes edge
// identities and attachment order inside each pair gadget.
struct GridEdge {
    int p = 0;
    int q = 0;
    int gamma = 0;
    int delta = 0;

    auto operator<=>(const GridEdge&) const = default;
    std::string id() const;  // "p.gamma.q.delta"
};

// Drops same-row edges, collapses duplicates, orients rows ascending and
// sorts; the sorted order is the canonical edge identity assignment.
std::pair<PCInstance, std::vector<GridEdge>> normalize_pc(const PCInstance& raw);

// Vertex ids of the frame: two cycle ladders of length 2k and k short
// ladders of length 4, plus the connecting edges.
struct FrameIds {
    std::vector<VertexId> v_left, u_left;    // index i-1 for i in 1..2k
    std::vector<VertexId> v_right, u_right;
    std::vector<std::array<VertexId, 4>> ladder_v;  // [alpha-1][i], i in 0..3
    std::vector<std::array<VertexId, 4>> ladder_u;

    std::vector<VertexId> all_in_order() const;
};

// 16k vertices, 26k edges; k >= 2.
std::pair<Graph, FrameIds> build_frame(int k);

// Per-grid-edge gadget vertex ids.
struct EdgeGadgetIds {
    GridEdge e;
    VertexId left = 0, mid = 0, right = 0;
    std::array<VertexId, 3> helpers_left{};   // K5-edge (left, mid)
    std::array<VertexId, 3> helpers_right{};  // K5-edge (mid, right)
};

// Symbol table and structured id maps for a reduced instance. The symbol
// list is what lands in instance files; the tables are derived views used
// by the solvers and the certificate builder.
struct Manifest {
    enum class Kind { Reduced, TrivialYes, TrivialNo, Gadget };

    Kind kind = Kind::Reduced;
    int k = 0;
    std::vector<GridEdge> grid_edges;

    FrameIds frame;
    std::vector<VertexId> apex;  // index beta-1
    // links[i-1][alpha-1][beta-1] = wiring vertex tied to ladder alpha and
    // apex beta at level i.
    std::array<std::vector<std::vector<VertexId>>, 3> links;
    std::vector<ChoiceGadget> choice_gadgets;          // index 3*(beta-1)+? see below
    std::map<std::pair<int, int>, ChoiceGadget> pair_gadgets;  // by (p, q)
    std::vector<EdgeGadgetIds> edge_gadgets;           // normalized order

    // Standalone gadget instances keep their gadget here.
    ChoiceGadget standalone;

    // Full symbol table, in emission order: primary symbols cover every
    // vertex once; identification cross-references ("<gadget>.b.<j>") and
    // meta entries follow the same line grammar.
    std::vector<std::pair<std::string, VertexId>> symbols;

    // choice gadget for level i (1..3) and apex beta (1..k)
    const ChoiceGadget& choice_gadget(int i, int beta) const;
    ChoiceGadget& choice_gadget(int i, int beta);
    VertexId link(int i, int alpha, int beta) const;

    bool operator==(const Manifest& o) const;
};

// The reduced vertex-deletion instance: graph, budget, and symbol maps.
struct VPInstance {
    Graph graph;
    long long budget = 0;
    Manifest manifest;

    bool operator==(const VPInstance&) const = default;
};

// Builds the full reduction. Instances with k = 1 short-circuit to a
// canonical trivial YES (single vertex, budget 0); instances where some
// row pair has no edge short-circuit to a canonical trivial NO (a K5 with
// budget 0). Everything else gets the frame, apexes, wiring gadgets, edge
// gadgets and pair gadgets, with budget 3m + 6k^2.
VPInstance reduce(const PCInstance& pc);

// Wraps a standalone choice gadget as an instance with budget 2s.
VPInstance gadget_instance(int s);

}  // namespace pcvp
