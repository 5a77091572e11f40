#pragma once

#include <array>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "pcvp/graph.hpp"

namespace pcvp {

enum class KuratowskiKind { K5, K33 };

// A subdivision of K5 or K3,3 inside a host graph: the branch vertices plus
// the internally disjoint paths realizing the subdivision edges. Witnesses
// are validated structurally, never compared for identity.
struct KuratowskiWitness {
    KuratowskiKind kind;
    std::set<VertexId> branch_vertices;
    // Each path runs branch, internal..., branch; internal vertices have
    // degree two in the subdivision and appear on exactly one path.
    std::vector<std::vector<VertexId>> paths;

    std::set<VertexId> all_vertices() const;
};

// A K3,3 minor model: six disjoint connected branch sets, the first three
// forming one side of the bipartition.
struct MinorModel {
    std::array<std::set<VertexId>, 6> branch_sets;
};

bool is_planar(const Graph& g);

// Fast path for solver inner loops: vertices are 0..n-1.
bool is_planar_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

// Extracts a Kuratowski witness from a nonplanar graph; nullopt on planar
// input. The returned witness always passes validate_kuratowski_witness.
std::optional<KuratowskiWitness> find_kuratowski_witness(const Graph& g);

bool validate_kuratowski_witness(const Graph& g, const KuratowskiWitness& w);

// True iff the model's invariants hold in g: branch sets nonempty, pairwise
// disjoint, present in g, each inducing a connected subgraph, with a host
// edge between every cross pair of the bipartition.
bool validate_k33_minor_model(const Graph& g, const MinorModel& mm);

// Independent planarity oracle for small graphs: exhaustive search for a K5
// or K3,3 minor by edge-contraction enumeration with memoization. Intended
// as a cross-check for is_planar; keeps no code in common with it.
bool planarity_small_oracle(const Graph& g, std::size_t max_vertices = 12);

}  // namespace pcvp
