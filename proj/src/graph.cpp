#include "tcrs/graph.hpp"

#include "tcrs/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>

namespace tcrs {

namespace {

// Minimal union-find used for undirected connectivity.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

void insert_sorted(std::vector<Vertex>& list, Vertex v)
{
    list.insert(std::upper_bound(list.begin(), list.end(), v), v);
}

// Groups vertices by component id, ordering blocks by smallest member.
Partition group(const std::vector<std::int32_t>& component)
{
    Partition blocks;
    std::vector<std::int32_t> block_of(component.size(), -1);
    for (Vertex v = 0; v < component.size(); ++v) {
        auto c = component[v];
        if (c < 0)
            continue;
        if (block_of[c] < 0) {
            block_of[c] = static_cast<std::int32_t>(blocks.size());
            blocks.emplace_back();
        }
        blocks[block_of[c]].push_back(v);
    }
    return blocks;
}

} // namespace

Labels LabelSet::make(std::vector<std::string> labels)
{
    std::sort(labels.begin(), labels.end());
    auto dup = std::adjacent_find(labels.begin(), labels.end());
    if (dup != labels.end())
        throw DuplicateVertex("duplicate vertex label '" + *dup + "'");
    return Labels(new LabelSet(std::move(labels)));
}

std::optional<Vertex> LabelSet::find(std::string_view label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return std::nullopt;
    return static_cast<Vertex>(it - labels_.begin());
}

Vertex LabelSet::at(std::string_view label) const
{
    if (auto v = find(label))
        return *v;
    throw UnknownVertex("unknown vertex '" + std::string(label) + "'");
}

bool same_labels(const Labels& a, const Labels& b)
{
    return a == b || *a == *b;
}

DiGraph::DiGraph(Labels labels) :
    labels_(std::move(labels)),
    out_(labels_->size()),
    in_(labels_->size()),
    matrix_(labels_->size() * labels_->size(), 0)
{
}

bool DiGraph::add_arc(Vertex from, Vertex to)
{
    auto n = vertex_count();
    if (from >= n || to >= n)
        throw UnknownVertex("arc endpoint out of range");
    if (from == to)
        throw SelfLoop("self-loop on '" + label(from) + "'");
    auto& cell = matrix_[from * n + to];
    if (cell)
        return false;
    cell = 1;
    insert_sorted(out_[from], to);
    insert_sorted(in_[to], from);
    ++arc_count_;
    return true;
}

std::vector<Arc> DiGraph::arcs() const
{
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex u = 0; u < vertex_count(); ++u)
        for (auto v : out_[u])
            result.push_back({u, v});
    return result;
}

bool operator==(const DiGraph& a, const DiGraph& b)
{
    return same_labels(a.labels_, b.labels_) && a.matrix_ == b.matrix_;
}

Partition connected_components(const DiGraph& g)
{
    DisjointSets sets(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (auto v : g.successors(u))
            sets.unite(u, v);
    std::vector<std::int32_t> component(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        component[v] = static_cast<std::int32_t>(sets.find(v));
    return group(component);
}

bool is_connected(const DiGraph& g)
{
    return connected_components(g).size() <= 1;
}

ComponentMap strong_components_without(const DiGraph& g, std::optional<Vertex> removed)
{
    // Iterative Tarjan.
    auto n = g.vertex_count();
    constexpr std::int32_t unvisited = -1;
    std::vector<std::int32_t> index(n, unvisited), low(n, 0);
    std::vector<std::uint8_t> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::pair<Vertex, std::size_t>> call;
    ComponentMap map{std::vector<std::int32_t>(n, -1), {}};
    std::int32_t counter = 0;

    auto skip = [&](Vertex v) { return removed && *removed == v; };

    for (Vertex root = 0; root < n; ++root) {
        if (skip(root) || index[root] != unvisited)
            continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!call.empty()) {
            auto& [v, next] = call.back();
            auto succ = g.successors(v);
            if (next < succ.size()) {
                Vertex w = succ[next++];
                if (skip(w))
                    continue;
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            Vertex done = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                auto id = static_cast<std::int32_t>(map.size.size());
                std::uint32_t count = 0;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    map.component[w] = id;
                    ++count;
                } while (w != done);
                map.size.push_back(count);
            }
        }
    }
    return map;
}

Partition strongly_connected_components(const DiGraph& g)
{
    return group(strong_components_without(g, std::nullopt).component);
}

bool is_strongly_connected(const DiGraph& g)
{
    return strong_components_without(g, std::nullopt).size.size() <= 1;
}

namespace {

// Returns the order and whether every vertex was emitted.
std::pair<std::vector<Vertex>, bool> kahn(const DiGraph& g)
{
    auto n = g.vertex_count();
    std::vector<std::size_t> indegree(n);
    for (Vertex v = 0; v < n; ++v)
        indegree[v] = g.predecessors(v).size();
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    for (Vertex v = 0; v < n; ++v)
        if (indegree[v] == 0)
            ready.push(v);
    std::vector<Vertex> order;
    order.reserve(n);
    while (!ready.empty()) {
        auto v = ready.top();
        ready.pop();
        order.push_back(v);
        for (auto w : g.successors(v))
            if (--indegree[w] == 0)
                ready.push(w);
    }
    bool complete = order.size() == n;
    return {std::move(order), complete};
}

} // namespace

std::vector<Vertex> topological_order(const DiGraph& g)
{
    auto [order, complete] = kahn(g);
    if (!complete)
        throw CyclicError("graph contains a circuit");
    return order;
}

bool is_acyclic(const DiGraph& g)
{
    return kahn(g).second;
}

DiGraph induced_subgraph(const DiGraph& g, std::span<const Vertex> vertices)
{
    std::vector<std::string> names;
    names.reserve(vertices.size());
    for (auto v : vertices) {
        if (v >= g.vertex_count())
            throw UnknownVertex("vertex index " + std::to_string(v) + " not in graph");
        names.push_back(g.label(v));
    }
    DiGraph sub(std::move(names));
    std::vector<std::int64_t> local(g.vertex_count(), -1);
    for (auto v : vertices)
        local[v] = sub.vertex(g.label(v));
    for (auto u : vertices)
        for (auto v : g.successors(u))
            if (local[v] >= 0)
                sub.add_arc(static_cast<Vertex>(local[u]), static_cast<Vertex>(local[v]));
    return sub;
}

bool is_spanning_tree(std::size_t n, std::span<const Edge> edges)
{
    if (n == 0)
        return edges.empty();
    if (edges.size() != n - 1)
        return false;
    DisjointSets sets(n);
    for (auto e : edges) {
        if (e.u >= n || e.v >= n || e.u == e.v)
            return false;
        if (!sets.unite(e.u, e.v))
            return false;
    }
    return true;
}

Tree::Tree(Labels labels, std::vector<Edge> edges) :
    labels_(std::move(labels)), edges_(std::move(edges)), adjacency_(labels_->size())
{
    for (auto& e : edges_)
        e = Edge::make(e.u, e.v);
    std::sort(edges_.begin(), edges_.end());
    if (!is_spanning_tree(labels_->size(), edges_))
        throw BadTree("edges do not form a spanning tree");
    for (auto e : edges_) {
        insert_sorted(adjacency_[e.u], e.v);
        insert_sorted(adjacency_[e.v], e.u);
    }
}

bool Tree::has_edge(Vertex a, Vertex b) const
{
    return std::binary_search(edges_.begin(), edges_.end(), Edge::make(a, b));
}

std::vector<Vertex> tree_path(const Tree& t, Vertex from, Vertex to)
{
    auto n = t.vertex_count();
    if (from >= n || to >= n)
        throw UnknownVertex("tree path endpoint out of range");
    constexpr Vertex none = static_cast<Vertex>(-1);
    std::vector<Vertex> parent(n, none);
    std::vector<Vertex> frontier{to};
    parent[to] = to;
    // Search from `to` so walking parents from `from` yields the path in order.
    while (!frontier.empty() && parent[from] == none) {
        auto v = frontier.back();
        frontier.pop_back();
        for (auto w : t.neighbors(v))
            if (parent[w] == none) {
                parent[w] = v;
                frontier.push_back(w);
            }
    }
    std::vector<Vertex> path{from};
    for (auto v = from; v != to; v = parent[v])
        path.push_back(parent[v]);
    return path;
}

} // namespace tcrs
