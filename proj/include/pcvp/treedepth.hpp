#pragma once

#include <map>

#include "pcvp/gadgets.hpp"
#include "pcvp/graph.hpp"
#include "pcvp/reduction.hpp"

namespace pcvp {

// A rooted forest on a graph's vertices certifying a treedepth upper bound:
// every graph edge must join an ancestor-descendant pair. `depth` counts
// vertices on the longest root-to-leaf path.
struct EliminationForest {
    static constexpr VertexId kRoot = 0;

    std::map<VertexId, VertexId> parent;  // kRoot marks roots
    int depth = 0;

    bool operator==(const EliminationForest&) const = default;
};

// Constructive certificate for a reduced instance: the frame and apex
// vertices form a single chain at the top; each leftover component (a
// wiring gadget, or a pair gadget with its edge chains) gets a recursively
// split subtree of logarithmic depth. Throws on non-reduced instances.
EliminationForest build_elimination_forest(const VPInstance& vp);

// True iff the forest covers exactly the graph's vertices (coverage
// mismatch throws), is acyclic, every edge joins an ancestor-descendant
// pair, and the declared depth equals the measured one.
bool validate_elimination_forest(const Graph& g, const EliminationForest& ef);

// Exact treedepth by memoized recursion over connected vertex subsets:
// empty 0, single vertex 1, disconnected max of components, connected
// 1 + min over vertex removals.
int exact_treedepth_small(const Graph& g, std::size_t max_vertices = 16);

// Witness mode: an optimal elimination forest realizing the exact value.
EliminationForest exact_treedepth_forest(const Graph& g,
                                         std::size_t max_vertices = 16);

// Builds the recursive subtree for a standalone choice gadget, possibly
// with constant-size graphs hanging off its attachment vertices. Exposed
// for the logarithmic-depth regression checks.
EliminationForest build_gadget_forest(const Graph& g, const ChoiceGadget& cg);

}  // namespace pcvp
