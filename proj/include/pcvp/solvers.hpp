#pragma once

#include <optional>
#include <set>
#include <vector>

#include "pcvp/deletion_set.hpp"
#include "pcvp/graph.hpp"
#include "pcvp/reduction.hpp"

namespace pcvp {

// A permutation of [k], stored as images: images[p-1] = rho(p).
struct Permutation {
    std::vector<int> images;

    int k() const { return static_cast<int>(images.size()); }
    int operator()(int p) const { return images.at(p - 1); }
    bool is_valid() const;
    // q such that rho(q) = beta; throws if beta has no preimage.
    int preimage(int beta) const;

    static Permutation identity(int k);

    bool operator==(const Permutation&) const = default;
};

// Exhaustive permutation-clique search, lexicographically first solution.
// k <= 8.
std::optional<Permutation> solve_pc_bruteforce(const PCInstance& pc);

// Assembles the canonical tight deletion set for a known permutation-clique
// solution: per-gadget canonical minimum solutions sparing the vertices the
// permutation selects, plus the cheap side of every grid-edge chain. Throws
// "not a witness" if rho is not a clique of the source instance.
DeletionSet build_completeness_witness(const VPInstance& vp,
                                       const Permutation& rho);

// |X| <= budget and the remainder is planar. Unknown vertices are an error.
bool verify_deletion_witness(const VPInstance& vp, const DeletionSet& x);

// Exact decision for reduced instances at desk scale (k <= 3, at most four
// edges per row pair): searches the cross product of per-gadget minimum
// solutions and per-edge chain choices, pruning branches whose partial
// remainder is already nonplanar, and returns the first full combination
// whose remainder is planar. Deterministic.
std::optional<DeletionSet> structured_vp_decide(const VPInstance& vp);

// Reads the permutation off a tight valid witness: for every apex the
// unique ladder whose wiring vertices all survive. Throws "witness does not
// decode" if the witness violates any step (missing survivor, layer
// disagreement, non-permutation, non-clique).
Permutation decode_permutation(const VPInstance& vp, const DeletionSet& x);

// Exact minimum vertex planarization by branching on obstruction vertices,
// never touching `forbidden`. Requires at most 25 deletable vertices and
// budget <= 8. Returns a minimum-size witness of size <= budget, or nullopt.
std::optional<DeletionSet> small_vp_oracle(const Graph& g, int budget,
                                           const std::set<VertexId>& forbidden);

// All vertices carrying the K5-helper role.
std::set<VertexId> helper_vertices(const Graph& g);

}  // namespace pcvp
