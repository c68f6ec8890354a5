#pragma once

// Exact minimum directed feedback vertex sets.

#include "tcrs/graph.hpp"

#include <span>
#include <vector>

namespace tcrs {

struct DfvsResult {
    // Sorted vertex indices.
    std::vector<Vertex> vertices;
    std::size_t size() const { return vertices.size(); }
};

// True iff deleting `s` leaves g acyclic. Throws UnknownVertex.
bool is_dfvs(const DiGraph& g, std::span<const Vertex> s);

// Minimum DFVS, lexicographically smallest among all minimum ones.
// Exact branch and bound; supports up to 64 vertices (throws TooLarge).
DfvsResult min_dfvs(const DiGraph& g);

namespace detail {

// Subset enumeration by increasing size then lexicographic order; the
// cross-check for min_dfvs. At most 20 vertices.
DfvsResult min_dfvs_by_enumeration(const DiGraph& g);

} // namespace detail

} // namespace tcrs
