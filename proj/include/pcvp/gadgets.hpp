#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pcvp/deletion_set.hpp"
#include "pcvp/graph.hpp"

namespace pcvp {

// An s-choice gadget: backbone vertices a_0..a_{2s+1} joined by K5-edges,
// with attachment vertices b_1..b_s tied to the backbone by two K5-edges
// each. Any planarizing deletion of minimum size (2s) spares at least one
// attachment vertex.
struct ChoiceGadget {
    struct K5Edge {
        VertexId x, y;
        std::array<VertexId, 3> helpers;
    };

    int s = 0;
    std::string id;
    std::vector<VertexId> a_ids;                 // index t in 0..2s+1
    std::vector<VertexId> b_ids;                 // index j-1 for j in 1..s
    std::vector<K5Edge> k5_edges;                // backbone edges first, then
                                                 // b_j a_{2j-1}, b_j a_{2j}

    VertexId a(int t) const { return a_ids.at(t); }
    VertexId b(int j) const { return b_ids.at(j - 1); }
    std::vector<VertexId> helper_ids() const;
};

// Adds three fresh helper vertices and turns {x, y, helpers} into a
// 5-clique. Re-adding an existing edge xy is a no-op; x == y is an error.
// The helpers carry role K5Helper with the given K5-edge identity.
std::array<VertexId, 3> introduce_k5_edge(Graph& g, VertexId x, VertexId y,
                                          const std::string& k5_id = {});

// Builds a standalone s-choice gadget (s >= 1). Total vertex count is
// (3s + 2) + 3(4s + 1).
std::pair<Graph, ChoiceGadget> build_choice_gadget(int s,
                                                   const std::string& id = "g");

// The closed-form minimum solution sparing b_j: all other b's, the odd
// backbone vertices up to a_{2j-1} and the even ones from a_{2j} on.
DeletionSet canonical_choice_solution(const ChoiceGadget& cg, int j);

// All helper-free deletion sets of size exactly 2s that leave the gadget
// planar, in lexicographic order of their sorted vertex lists. Requires
// s <= max_s (combinatorial cutoff).
std::vector<DeletionSet> enumerate_min_choice_solutions(const Graph& g,
                                                        const ChoiceGadget& cg,
                                                        int max_s = 4);

// Position-space form of a minimum solution, reusable across every embedded
// copy of the same-size gadget.
struct ChoiceSolutionPattern {
    std::vector<int> deleted_a;     // backbone indices t
    std::vector<int> deleted_b;     // attachment indices j (1-based)
    std::vector<int> surviving_b;   // complement of deleted_b
};

// Cached patterns for the canonical gadget of size s (s <= 4).
const std::vector<ChoiceSolutionPattern>& min_choice_solution_patterns(int s);

}  // namespace pcvp
