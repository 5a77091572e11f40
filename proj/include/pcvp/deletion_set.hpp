#pragma once

#include <set>

#include "pcvp/graph.hpp"

namespace pcvp {

// A candidate (or certified) solution to the vertex-deletion problem.
struct DeletionSet {
    std::set<VertexId> vertices;

    std::size_t size() const { return vertices.size(); }
    bool contains(VertexId v) const { return vertices.count(v) != 0; }

    bool operator==(const DeletionSet&) const = default;
    auto operator<=>(const DeletionSet&) const = default;
};

}  // namespace pcvp
