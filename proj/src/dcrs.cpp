#include "tcrs/dcrs.hpp"

#include "tcrs/dfvs.hpp"
#include "tcrs/errors.hpp"

#include <algorithm>

namespace tcrs {

namespace {

struct Built {
    TemporalGraph graph;
    DcrsComponent record; // in component-local indices
};

Built build(const DiGraph& component)
{
    if (!is_connected(component))
        throw NotConnected("component is not connected");
    auto n = component.vertex_count();
    Built out{TemporalGraph(component.labels(), Orientation::directed), {}};
    for (Vertex v = 0; v < n; ++v)
        out.record.vertices.push_back(v);
    if (n <= 1) {
        out.record.order = out.record.vertices;
        return out;
    }

    auto feedback = min_dfvs(component).vertices;
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < n; ++v)
        if (!std::binary_search(feedback.begin(), feedback.end(), v))
            rest.push_back(v);
    if (rest.empty())
        throw InternalError("feedback set covers the whole component");
    std::vector<Vertex> order;
    for (auto local : topological_order(induced_subgraph(component, rest)))
        order.push_back(rest[local]); // induced_subgraph keeps relative order

    auto m = static_cast<Time>(order.size());
    for (auto v : feedback)
        out.graph.add(v, order.front(), 1);
    for (std::size_t j = 0; j + 1 < order.size(); ++j)
        out.graph.add(order[j], order[j + 1], static_cast<Time>(j) + 2);
    for (auto v : feedback)
        out.graph.add(order.back(), v, m + 1);

    out.record.feedback_set = std::move(feedback);
    out.record.order = std::move(order);
    return out;
}

} // namespace

TemporalGraph construct_component(const DiGraph& component)
{
    return build(component).graph;
}

DcrsSolution solve_dcrs(const DiGraph& r)
{
    DcrsSolution solution{TemporalGraph(r.labels(), Orientation::directed), {}};
    for (const auto& block : connected_components(r)) {
        auto sub = induced_subgraph(r, block);
        auto built = build(sub);
        // Component-local index i corresponds to block[i].
        for (const auto& e : built.graph.edges())
            solution.graph.add(block[e.u], block[e.v], e.t);
        auto lift = [&](std::vector<Vertex>& vs) {
            for (auto& v : vs)
                v = block[v];
        };
        lift(built.record.vertices);
        lift(built.record.feedback_set);
        lift(built.record.order);
        solution.components.push_back(std::move(built.record));
    }
    return solution;
}

std::size_t min_dcrs_size(const DiGraph& r)
{
    std::size_t total = 0;
    for (const auto& block : connected_components(r)) {
        total += block.size() - 1;
        if (block.size() > 1)
            total += min_dfvs(induced_subgraph(r, block)).size();
    }
    return total;
}

} // namespace tcrs
