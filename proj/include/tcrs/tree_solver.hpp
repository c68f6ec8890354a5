#pragma once

// Tree solutions (n - 1 temporal edges) for strongly connected request
// graphs: saturate with authorized arcs, read off the forced-edge tree, then
// order its edges by the precedence constraints the remaining requests impose.

#include "tcrs/graph.hpp"
#include "tcrs/temporal.hpp"

#include <optional>
#include <vector>

namespace tcrs {

// One node per forced edge. An arc e -> e' means time(e) < time(e').
struct ConstraintDigraph {
    // Lexicographic.
    std::vector<Edge> nodes;
    // (from, to) node indices; sorted, no duplicates.
    std::vector<std::pair<std::size_t, std::size_t>> arcs;

    bool has_arc(Edge from, Edge to) const;
};

// A spanning tree with one appearance time per edge.
class LabeledTree {
public:
    // times[i] belongs to tree.edges()[i].
    LabeledTree(Tree tree, std::vector<Time> times);

    const Tree& tree() const { return tree_; }
    const std::vector<Time>& times() const { return times_; }
    // Throws BadTree if e is not a tree edge.
    Time time(Edge e) const;

    TemporalGraph to_temporal() const;

private:
    Tree tree_;
    std::vector<Time> times_;
};

struct Labelisation {
    // Empty when the constraints contain a circuit.
    std::optional<LabeledTree> tree;
    ConstraintDigraph constraints;
};

// Builds the precedence digraph from every non-forced request arc's tree
// path and labels edges 1..n-1 in topological order (smallest edge first).
// Throws BadTree unless t's edges are exactly r's forced edges.
Labelisation labelisation(const DiGraph& r, const Tree& t);

// Repeatedly adds the lexicographically smallest authorized arc (u,v) not yet
// present, together with (v,u). Throws NotStronglyConnected.
DiGraph saturate_authorized(const DiGraph& r);

enum class TreeStatus { solved, no_tree_solution, input_not_supported };

struct TreeSolveResult {
    TreeStatus status = TreeStatus::no_tree_solution;
    std::optional<LabeledTree> tree;
};

// Requires a strongly connected r; anything else yields input_not_supported.
// A returned tree always verifies against r (checked; InternalError if not).
TreeSolveResult solve_tree(const DiGraph& r);

struct ComponentTreeResult {
    TreeStatus status = TreeStatus::no_tree_solution;
    // One tree per connected component (over that component's labels),
    // ordered by smallest vertex. Filled only when solved.
    std::vector<LabeledTree> components;
    // Union of the component trees over r's labels.
    std::optional<TemporalGraph> combined;
};

// Applies solve_tree to every connected component. Any component that is
// connected but not strongly connected makes the whole result
// input_not_supported.
ComponentTreeResult solve_tree_components(const DiGraph& r);

} // namespace tcrs
