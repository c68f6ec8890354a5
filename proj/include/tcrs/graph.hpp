#pragma once

// Static graph substrate: labelled vertex sets, digraphs, trees and the
// component / ordering algorithms the solvers are built on.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcrs {

// Dense vertex index. Indices follow the lexicographic order of labels, so
// every "smallest label first" tie-break is a "smallest index first" one.
using Vertex = std::uint32_t;

class LabelSet;
using Labels = std::shared_ptr<const LabelSet>;

// Immutable, sorted set of unique vertex labels shared between graphs over
// the same vertices.
class LabelSet {
public:
    // Sorts the labels; throws DuplicateVertex on repeats.
    static Labels make(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& operator[](Vertex v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<Vertex> find(std::string_view label) const;
    // Throws UnknownVertex.
    Vertex at(std::string_view label) const;

    friend bool operator==(const LabelSet& a, const LabelSet& b) { return a.labels_ == b.labels_; }

private:
    explicit LabelSet(std::vector<std::string> labels) : labels_(std::move(labels)) {}
    std::vector<std::string> labels_;
};

bool same_labels(const Labels& a, const Labels& b);

struct Arc {
    Vertex from;
    Vertex to;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Unordered pair, stored with u < v.
struct Edge {
    Vertex u;
    Vertex v;

    static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
    bool has(Vertex x) const { return x == u || x == v; }
    Vertex other(Vertex x) const { return x == u ? v : u; }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Blocks are sorted internally and ordered by their smallest member.
using Partition = std::vector<std::vector<Vertex>>;

// Loop-free digraph without parallel arcs. Arcs can only be added, never
// removed.
class DiGraph {
public:
    DiGraph() : DiGraph(LabelSet::make({})) {}
    explicit DiGraph(Labels labels);
    explicit DiGraph(std::vector<std::string> labels) : DiGraph(LabelSet::make(std::move(labels))) {}

    const Labels& labels() const { return labels_; }
    std::size_t vertex_count() const { return out_.size(); }
    std::size_t arc_count() const { return arc_count_; }
    const std::string& label(Vertex v) const { return (*labels_)[v]; }
    Vertex vertex(std::string_view label) const { return labels_->at(label); }

    bool has_arc(Vertex from, Vertex to) const { return matrix_[from * vertex_count() + to] != 0; }
    // Returns false if the arc was already present. Throws SelfLoop and
    // UnknownVertex.
    bool add_arc(Vertex from, Vertex to);
    bool add_arc(std::string_view from, std::string_view to) { return add_arc(vertex(from), vertex(to)); }

    // Both neighbour lists are kept sorted.
    std::span<const Vertex> successors(Vertex v) const { return out_[v]; }
    std::span<const Vertex> predecessors(Vertex v) const { return in_[v]; }

    // All arcs in lexicographic order.
    std::vector<Arc> arcs() const;

    friend bool operator==(const DiGraph& a, const DiGraph& b);

private:
    Labels labels_;
    std::vector<std::vector<Vertex>> out_;
    std::vector<std::vector<Vertex>> in_;
    std::vector<std::uint8_t> matrix_;
    std::size_t arc_count_ = 0;
};

// Components of the underlying undirected graph.
Partition connected_components(const DiGraph& g);
bool is_connected(const DiGraph& g);

Partition strongly_connected_components(const DiGraph& g);
bool is_strongly_connected(const DiGraph& g);

// Per-vertex strong component ids of g with one vertex deleted. The deleted
// vertex gets id -1.
struct ComponentMap {
    std::vector<std::int32_t> component;
    std::vector<std::uint32_t> size;

    bool together(Vertex a, Vertex b) const
    {
        return component[a] >= 0 && component[a] == component[b];
    }
};
ComponentMap strong_components_without(const DiGraph& g, std::optional<Vertex> removed);

// Kahn's algorithm, smallest available vertex first. Throws CyclicError.
std::vector<Vertex> topological_order(const DiGraph& g);
bool is_acyclic(const DiGraph& g);

// The subgraph on `vertices` (with its own label set). Throws UnknownVertex
// for indices outside g.
DiGraph induced_subgraph(const DiGraph& g, std::span<const Vertex> vertices);

// Spanning tree over a label set.
class Tree {
public:
    // Throws BadTree unless the edges form a spanning tree.
    Tree(Labels labels, std::vector<Edge> edges);

    const Labels& labels() const { return labels_; }
    std::size_t vertex_count() const { return adjacency_.size(); }
    std::span<const Edge> edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    bool has_edge(Vertex a, Vertex b) const;

    friend bool operator==(const Tree& a, const Tree& b)
    {
        return same_labels(a.labels_, b.labels_) && a.edges_ == b.edges_;
    }

private:
    Labels labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

// Unique simple path from `from` to `to`, both endpoints included.
std::vector<Vertex> tree_path(const Tree& t, Vertex from, Vertex to);

// True when `edges` forms a spanning tree on n vertices.
bool is_spanning_tree(std::size_t n, std::span<const Edge> edges);

} // namespace tcrs
