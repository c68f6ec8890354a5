#pragma once

// Exhaustive oracles used to certify the polynomial solvers on small
// instances. Everything here is exponential; size limits are enforced with
// TooLarge.

#include "tcrs/graph.hpp"
#include "tcrs/temporal.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace tcrs {

struct OracleConfig {
    // Largest solution size searched. Defaults: 2n - 4 for undirected
    // searches (0, 1, 3 for n = 1, 2, 3), 2n - 2 for directed ones.
    std::optional<std::size_t> max_k;
    // Permit an endpoint pair to be used at two distinct times.
    bool allow_multi = false;
};

std::size_t default_max_k_crs(std::size_t n);
std::size_t default_max_k_dcrs(std::size_t n);

struct OracleResult {
    bool feasible = false;
    // Minimum size when feasible, otherwise the exhausted bound.
    std::size_t k = 0;
    // Edge i of the witness has time i + 1; the sequence of endpoint pairs
    // is the lexicographically first feasible one.
    std::optional<TemporalGraph> witness;
};

// Smallest temporal graph satisfying r, by iterative deepening over edge
// sequences with distinct times 1..k. At most 8 vertices.
OracleResult brute_min_crs(const DiGraph& r, const OracleConfig& config = {});

// Same for temporal digraphs.
OracleResult brute_min_dcrs(const DiGraph& r, const OracleConfig& config = {});

using VertexMask = std::uint32_t;

// Vertex sets of the closed walks of r: every S with |S| >= 2 and r[S]
// strongly connected. Sorted by mask value.
struct ClosedWalkFamily {
    std::size_t vertex_count = 0;
    std::vector<VertexMask> sets;
};

// At most 20 vertices.
ClosedWalkFamily closed_walk_family(const DiGraph& r);

// Some closed-walk set contains a and b but not c.
bool family_walk_through(const ClosedWalkFamily& family, Vertex a, Vertex b, Vertex excluded);

// Helly test through vertex triples: for every three vertices, the sets
// meeting at least two of them have a common vertex.
bool helly_by_triples(const ClosedWalkFamily& family);

// Helly test straight from the definition: searches for a pairwise
// intersecting subfamily with empty intersection.
bool helly_by_subfamilies(const ClosedWalkFamily& family);

bool brute_walk_helly(const DiGraph& r);

// Labelled tree for a Prüfer code over n >= 2 vertices.
std::vector<Edge> prufer_decode(std::span<const Vertex> code, std::size_t n);

// First tree in Prüfer-code lexicographic order in which every family set
// induces a connected subtree. At most 10 vertices.
std::optional<std::vector<Edge>> find_host_tree(const ClosedWalkFamily& family);

std::optional<Tree> brute_tree_representation(const DiGraph& r);

} // namespace tcrs
