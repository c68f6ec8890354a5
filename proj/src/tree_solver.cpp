#include "tcrs/tree_solver.hpp"

#include "tcrs/errors.hpp"
#include "tcrs/helly.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace tcrs {

bool ConstraintDigraph::has_arc(Edge from, Edge to) const
{
    auto a = std::lower_bound(nodes.begin(), nodes.end(), from);
    auto b = std::lower_bound(nodes.begin(), nodes.end(), to);
    if (a == nodes.end() || *a != from || b == nodes.end() || *b != to)
        return false;
    std::pair<std::size_t, std::size_t> key(a - nodes.begin(), b - nodes.begin());
    return std::binary_search(arcs.begin(), arcs.end(), key);
}

LabeledTree::LabeledTree(Tree tree, std::vector<Time> times) : tree_(std::move(tree)), times_(std::move(times))
{
    if (times_.size() != tree_.edges().size())
        throw BadTree("one appearance time per tree edge expected");
    for (auto t : times_)
        if (t == 0)
            throw InvalidTime("appearance times must be positive");
}

Time LabeledTree::time(Edge e) const
{
    e = Edge::make(e.u, e.v);
    auto edges = tree_.edges();
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e)
        throw BadTree("not a tree edge");
    return times_[it - edges.begin()];
}

TemporalGraph LabeledTree::to_temporal() const
{
    TemporalGraph g(tree_.labels(), Orientation::undirected);
    auto edges = tree_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        g.add(edges[i].u, edges[i].v, times_[i]);
    return g;
}

Labelisation labelisation(const DiGraph& r, const Tree& t)
{
    if (!same_labels(r.labels(), t.labels()))
        throw BadTree("tree and request graph have different vertex sets");
    auto forced = forced_edges(r);
    if (!std::equal(forced.begin(), forced.end(), t.edges().begin(), t.edges().end()))
        throw BadTree("tree edges differ from the forced edges of the request graph");

    Labelisation result;
    result.constraints.nodes = forced;
    auto& nodes = result.constraints.nodes;
    auto node_of = [&](Vertex a, Vertex b) {
        auto e = Edge::make(a, b);
        return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), e) - nodes.begin());
    };

    auto& arcs = result.constraints.arcs;
    for (auto arc : r.arcs()) {
        if (r.has_arc(arc.to, arc.from))
            continue; // forced edge: the tree edge itself serves it
        auto path = tree_path(t, arc.from, arc.to);
        for (std::size_t i = 0; i + 2 < path.size(); ++i)
            arcs.emplace_back(node_of(path[i], path[i + 1]), node_of(path[i + 1], path[i + 2]));
    }
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    // Kahn over D, smallest edge first.
    auto m = nodes.size();
    std::vector<std::vector<std::size_t>> succ(m);
    std::vector<std::size_t> indegree(m, 0);
    for (auto [a, b] : arcs) {
        succ[a].push_back(b);
        ++indegree[b];
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < m; ++i)
        if (indegree[i] == 0)
            ready.push(i);
    std::vector<Time> times(m, 0);
    Time next = 1;
    while (!ready.empty()) {
        auto i = ready.top();
        ready.pop();
        times[i] = next++;
        for (auto j : succ[i])
            if (--indegree[j] == 0)
                ready.push(j);
    }
    if (next - 1 != m)
        return result;
    result.tree.emplace(t, std::move(times));
    return result;
}

DiGraph saturate_authorized(const DiGraph& r)
{
    if (!is_strongly_connected(r))
        throw NotStronglyConnected("saturation needs a strongly connected request graph");
    DiGraph g = r;
    auto n = g.vertex_count();
    while (true) {
        std::optional<Arc> pick;
        {
            WalkPredicates walks(g);
            for (Vertex u = 0; u < n && !pick; ++u)
                for (Vertex v = 0; v < n; ++v)
                    if (u != v && !g.has_arc(u, v) && walks.is_authorized(u, v)) {
                        pick = Arc{u, v};
                        break;
                    }
        }
        if (!pick)
            return g;
        g.add_arc(pick->from, pick->to);
        g.add_arc(pick->to, pick->from);
    }
}

TreeSolveResult solve_tree(const DiGraph& r)
{
    if (!is_strongly_connected(r))
        return {TreeStatus::input_not_supported, std::nullopt};
    auto saturated = saturate_authorized(r);
    auto forced = forced_edges(saturated);
    // Fewer than n - 1 forced edges, or a forced cycle, rules out any tree.
    if (!is_spanning_tree(saturated.vertex_count(), forced))
        return {TreeStatus::no_tree_solution, std::nullopt};
    auto labeled = labelisation(saturated, Tree(saturated.labels(), forced));
    if (!labeled.tree)
        return {TreeStatus::no_tree_solution, std::nullopt};
    if (!verify(labeled.tree->to_temporal(), r).satisfied)
        throw InternalError("labelled tree does not satisfy the request graph");
    return {TreeStatus::solved, std::move(labeled.tree)};
}

ComponentTreeResult solve_tree_components(const DiGraph& r)
{
    ComponentTreeResult result;
    auto blocks = connected_components(r);
    std::vector<DiGraph> parts;
    for (const auto& block : blocks) {
        parts.push_back(induced_subgraph(r, block));
        if (!is_strongly_connected(parts.back())) {
            result.status = TreeStatus::input_not_supported;
            return result;
        }
    }
    TemporalGraph combined(r.labels(), Orientation::undirected);
    for (const auto& part : parts) {
        auto solved = solve_tree(part);
        if (solved.status != TreeStatus::solved) {
            result.status = solved.status;
            result.components.clear();
            return result;
        }
        auto local = solved.tree->to_temporal();
        for (const auto& e : local.edges())
            combined.add(r.vertex(part.label(e.u)), r.vertex(part.label(e.v)), e.t);
        result.components.push_back(std::move(*solved.tree));
    }
    result.status = TreeStatus::solved;
    result.combined = std::move(combined);
    return result;
}

} // namespace tcrs
