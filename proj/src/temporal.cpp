#include "tcrs/temporal.hpp"

#include "tcrs/errors.hpp"

#include <algorithm>
#include <limits>

namespace tcrs {

TemporalGraph::TemporalGraph(Labels labels, Orientation orientation) :
    labels_(std::move(labels)), orientation_(orientation)
{
}

void TemporalGraph::add(Vertex u, Vertex v, Time t)
{
    auto n = vertex_count();
    if (u >= n || v >= n)
        throw UnknownVertex("temporal edge endpoint out of range");
    if (u == v)
        throw SelfLoop("temporal edge on a single vertex '" + (*labels_)[u] + "'");
    if (t == 0)
        throw InvalidTime("appearance times must be positive");
    if (!directed() && v < u)
        std::swap(u, v);
    TemporalEdge e{u, v, t};
    auto key = [](const TemporalEdge& x) { return std::tuple(x.t, x.u, x.v); };
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                               [&](const TemporalEdge& a, const TemporalEdge& b) { return key(a) < key(b); });
    if (it != edges_.end() && *it == e)
        throw DuplicateArc("duplicate temporal edge (" + (*labels_)[u] + ", " + (*labels_)[v] + ", " +
                           std::to_string(t) + ")");
    edges_.insert(it, e);
}

DiGraph snapshot(const TemporalGraph& g, Time t)
{
    DiGraph result(g.labels());
    for (const auto& e : g.edges()) {
        if (e.t != t)
            continue;
        result.add_arc(e.u, e.v);
        if (!g.directed())
            result.add_arc(e.v, e.u);
    }
    return result;
}

DiGraph footprint(const TemporalGraph& g)
{
    DiGraph result(g.labels());
    for (const auto& e : g.edges()) {
        result.add_arc(e.u, e.v);
        if (!g.directed())
            result.add_arc(e.v, e.u);
    }
    return result;
}

DiGraph reachability_graph(const TemporalGraph& g)
{
    auto n = g.vertex_count();
    const auto& edges = g.edges(); // already sorted by time
    constexpr Time never = std::numeric_limits<Time>::max();
    DiGraph reach(g.labels());
    std::vector<Time> arrival(n);

    for (Vertex source = 0; source < n; ++source) {
        // arrival[v]: smallest last-edge time of a journey source -> v.
        std::fill(arrival.begin(), arrival.end(), never);
        arrival[source] = 0;
        for (const auto& e : edges) {
            // Updates inside one timestamp only ever write e.t, which never
            // satisfies `arrival < e.t`, so same-time edges cannot chain.
            if (arrival[e.u] < e.t && arrival[e.v] > e.t)
                arrival[e.v] = e.t;
            else if (!g.directed() && arrival[e.v] < e.t && arrival[e.u] > e.t)
                arrival[e.u] = e.t;
        }
        for (Vertex v = 0; v < n; ++v)
            if (v != source && arrival[v] != never)
                reach.add_arc(source, v);
    }
    return reach;
}

bool is_temporally_connected(const TemporalGraph& g)
{
    auto n = g.vertex_count();
    return reachability_graph(g).arc_count() == n * (n == 0 ? 0 : n - 1);
}

Verification verify(const TemporalGraph& g, const DiGraph& requests)
{
    if (!same_labels(g.labels(), requests.labels()))
        throw VertexMismatch("temporal graph and request graph have different vertex sets");
    auto reach = reachability_graph(g);
    Verification result;
    for (auto arc : requests.arcs())
        if (!reach.has_arc(arc.from, arc.to))
            result.missing.push_back(arc);
    result.satisfied = result.missing.empty();
    return result;
}

TemporalGraph embed(const TemporalGraph& g, const Labels& into)
{
    TemporalGraph result(into, g.orientation());
    for (const auto& e : g.edges())
        result.add(into->at((*g.labels())[e.u]), into->at((*g.labels())[e.v]), e.t);
    return result;
}

} // namespace tcrs
