#pragma once

// Closed-walk and path predicates over request graphs, forced edges and
// authorized arcs.
//
// A closed walk has at least one arc. Its vertex set induces a strongly
// connected subgraph, and every strongly connected induced subgraph on two or
// more vertices carries a closed walk through all of its vertices. So "some
// closed walk avoiding c contains a and b" is the same as "a and b share a
// strong component of size >= 2 in R - c".

#include "tcrs/graph.hpp"

#include <vector>

namespace tcrs {

// Unordered pairs {u,v} with both (u,v) and (v,u) present; sorted.
using ForcedEdgeSet = std::vector<Edge>;

ForcedEdgeSet forced_edges(const DiGraph& r);

// Strong components of R - c for every c, computed once. The cache refers to
// the graph it was built from and must be rebuilt after that graph gains
// arcs; using a stale cache throws InternalError.
class WalkPredicates {
public:
    explicit WalkPredicates(const DiGraph& r);

    // False whenever excluded is a or b.
    bool closed_walk_through(Vertex a, Vertex b, Vertex excluded) const;

    // No x outside {u,v} has closed walks {u,x} avoiding v and {v,x}
    // avoiding u. Throws SelfLoop if u == v.
    bool is_authorized(Vertex u, Vertex v) const;

    // All authorized ordered pairs, lexicographic.
    std::vector<Arc> authorized_arcs() const;

private:
    void check_fresh() const;

    const DiGraph* graph_;
    std::size_t arc_count_;
    std::vector<ComponentMap> without_;
};

bool closed_walk_through(const DiGraph& r, Vertex a, Vertex b, Vertex excluded);

// Directed path a -> b in R - excluded. The empty path counts when a == b.
bool path_avoiding(const DiGraph& r, Vertex a, Vertex b, Vertex excluded);

bool is_authorized(const DiGraph& r, Vertex u, Vertex v);

std::vector<Arc> authorized_arcs(const DiGraph& r);

} // namespace tcrs
