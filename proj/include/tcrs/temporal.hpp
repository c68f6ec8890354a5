#pragma once

// Temporal graphs and digraphs, strict-journey reachability and the
// request verifier.

#include "tcrs/graph.hpp"

#include <cstdint>
#include <vector>

namespace tcrs {

// Appearance time; always >= 1. Only the relative order of times matters.
using Time = std::uint64_t;

enum class Orientation { undirected, directed };

// For undirected graphs the endpoints are stored with u < v.
struct TemporalEdge {
    Vertex u;
    Vertex v;
    Time t;
    friend auto operator<=>(const TemporalEdge&, const TemporalEdge&) = default;
};

// Set of distinct temporal edges (or arcs) over a label set. The same
// endpoint pair may occur at several distinct times.
class TemporalGraph {
public:
    TemporalGraph(Labels labels, Orientation orientation);
    TemporalGraph(std::vector<std::string> labels, Orientation orientation) :
        TemporalGraph(LabelSet::make(std::move(labels)), orientation)
    {
    }

    const Labels& labels() const { return labels_; }
    std::size_t vertex_count() const { return labels_->size(); }
    bool directed() const { return orientation_ == Orientation::directed; }
    Orientation orientation() const { return orientation_; }

    // Throws SelfLoop, InvalidTime (t == 0), DuplicateArc and UnknownVertex.
    void add(Vertex u, Vertex v, Time t);
    void add(std::string_view u, std::string_view v, Time t) { add(labels_->at(u), labels_->at(v), t); }

    // Sorted by (t, u, v).
    const std::vector<TemporalEdge>& edges() const { return edges_; }
    std::size_t size() const { return edges_.size(); }

    friend bool operator==(const TemporalGraph& a, const TemporalGraph& b)
    {
        return a.orientation_ == b.orientation_ && same_labels(a.labels_, b.labels_) && a.edges_ == b.edges_;
    }

private:
    Labels labels_;
    Orientation orientation_;
    std::vector<TemporalEdge> edges_;
};

// Static graph of the edges present at exactly time t. Undirected edges
// appear as a pair of opposite arcs.
DiGraph snapshot(const TemporalGraph& g, Time t);

// Static graph of every endpoint pair used at any time, same encoding as
// snapshot().
DiGraph footprint(const TemporalGraph& g);

// Arc (u,v) iff a strict journey leads from u to v. No self-pairs.
DiGraph reachability_graph(const TemporalGraph& g);

bool is_temporally_connected(const TemporalGraph& g);

struct Verification {
    bool satisfied = false;
    // Unsatisfied requests in lexicographic order.
    std::vector<Arc> missing;
};

// Checks every request arc against reachability. Throws VertexMismatch when
// the label sets differ.
Verification verify(const TemporalGraph& g, const DiGraph& requests);

// Rebuilds `g` over a larger label set containing all of its labels.
TemporalGraph embed(const TemporalGraph& g, const Labels& into);

} // namespace tcrs
