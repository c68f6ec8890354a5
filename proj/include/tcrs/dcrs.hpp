#pragma once

// Optimal temporal digraphs for a request graph: n - cc + sum of the
// per-component minimum feedback vertex set sizes arcs.

#include "tcrs/graph.hpp"
#include "tcrs/temporal.hpp"

#include <vector>

namespace tcrs {

// How one connected component was solved, in request-graph indices.
struct DcrsComponent {
    std::vector<Vertex> vertices;
    std::vector<Vertex> feedback_set;
    // Topological order of the component without its feedback set.
    std::vector<Vertex> order;
};

struct DcrsSolution {
    TemporalGraph graph;
    // Ordered by smallest vertex.
    std::vector<DcrsComponent> components;

    std::size_t size() const { return graph.size(); }
};

// For a connected component with feedback set {v_1..v_f} and topological
// order u_1..u_m of the rest:
//   (v_i, u_1) at time 1,
//   (u_j, u_j+1) at time j + 1,
//   (u_m, v_i) at time m + 1.
// Throws NotConnected.
TemporalGraph construct_component(const DiGraph& component);

DcrsSolution solve_dcrs(const DiGraph& r);

std::size_t min_dcrs_size(const DiGraph& r);

} // namespace tcrs
