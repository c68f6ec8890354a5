#include "tcrs/helly.hpp"

#include "tcrs/errors.hpp"

namespace tcrs {

namespace {

void check_vertex(const DiGraph& r, Vertex v)
{
    if (v >= r.vertex_count())
        throw UnknownVertex("vertex index " + std::to_string(v) + " not in graph");
}

bool walk_in(const ComponentMap& map, Vertex a, Vertex b)
{
    return map.together(a, b) && map.size[map.component[a]] >= 2;
}

} // namespace

ForcedEdgeSet forced_edges(const DiGraph& r)
{
    ForcedEdgeSet result;
    for (Vertex u = 0; u < r.vertex_count(); ++u)
        for (auto v : r.successors(u))
            if (u < v && r.has_arc(v, u))
                result.push_back({u, v});
    return result;
}

WalkPredicates::WalkPredicates(const DiGraph& r) : graph_(&r), arc_count_(r.arc_count())
{
    without_.reserve(r.vertex_count());
    for (Vertex c = 0; c < r.vertex_count(); ++c)
        without_.push_back(strong_components_without(r, c));
}

void WalkPredicates::check_fresh() const
{
    if (graph_->arc_count() != arc_count_)
        throw InternalError("walk predicate cache used after its graph gained arcs");
}

bool WalkPredicates::closed_walk_through(Vertex a, Vertex b, Vertex excluded) const
{
    check_fresh();
    check_vertex(*graph_, a);
    check_vertex(*graph_, b);
    check_vertex(*graph_, excluded);
    if (excluded == a || excluded == b)
        return false;
    return walk_in(without_[excluded], a, b);
}

bool WalkPredicates::is_authorized(Vertex u, Vertex v) const
{
    check_fresh();
    check_vertex(*graph_, u);
    check_vertex(*graph_, v);
    if (u == v)
        throw SelfLoop("authorization asked for a self-loop on '" + graph_->label(u) + "'");
    const auto& avoid_v = without_[v];
    const auto& avoid_u = without_[u];
    for (Vertex x = 0; x < graph_->vertex_count(); ++x) {
        if (x == u || x == v)
            continue;
        if (walk_in(avoid_v, u, x) && walk_in(avoid_u, v, x))
            return false;
    }
    return true;
}

std::vector<Arc> WalkPredicates::authorized_arcs() const
{
    std::vector<Arc> result;
    for (Vertex u = 0; u < graph_->vertex_count(); ++u)
        for (Vertex v = 0; v < graph_->vertex_count(); ++v)
            if (u != v && is_authorized(u, v))
                result.push_back({u, v});
    return result;
}

bool closed_walk_through(const DiGraph& r, Vertex a, Vertex b, Vertex excluded)
{
    check_vertex(r, a);
    check_vertex(r, b);
    check_vertex(r, excluded);
    if (excluded == a || excluded == b)
        return false;
    return walk_in(strong_components_without(r, excluded), a, b);
}

bool path_avoiding(const DiGraph& r, Vertex a, Vertex b, Vertex excluded)
{
    check_vertex(r, a);
    check_vertex(r, b);
    check_vertex(r, excluded);
    if (a == excluded || b == excluded)
        return false;
    if (a == b)
        return true;
    std::vector<std::uint8_t> seen(r.vertex_count(), 0);
    std::vector<Vertex> stack{a};
    seen[a] = 1;
    seen[excluded] = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto w : r.successors(v)) {
            if (w == b)
                return true;
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

bool is_authorized(const DiGraph& r, Vertex u, Vertex v)
{
    return WalkPredicates(r).is_authorized(u, v);
}

std::vector<Arc> authorized_arcs(const DiGraph& r)
{
    return WalkPredicates(r).authorized_arcs();
}

} // namespace tcrs
