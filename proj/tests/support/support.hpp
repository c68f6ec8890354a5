#pragma once

// Shared helpers for the unit and acceptance tests: fixture loading, instance
// generators and small independent oracles that do not reuse library code.

#include "tcrs/graph.hpp"
#include "tcrs/temporal.hpp"

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace tcrs::test {

std::filesystem::path fixture_path(const std::string& name);
DiGraph fixture_request(const std::string& name);
TemporalGraph fixture_temporal(const std::string& name);

// "a", "b", ... for n <= 26.
std::vector<std::string> letters(std::size_t n);

DiGraph digraph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& arcs);

// Bit i of `code` selects the i-th ordered pair (u, v), u != v, in
// lexicographic order. 0 <= code < 2^(n(n-1)).
DiGraph digraph_from_code(const Labels& labels, std::uint64_t code);
std::uint64_t digraph_count(std::size_t n);

DiGraph random_digraph(std::mt19937_64& rng, std::size_t n, double density);
DiGraph random_strongly_connected(std::mt19937_64& rng, std::size_t n, double density);
TemporalGraph random_temporal(std::mt19937_64& rng, std::size_t n, std::size_t max_edges, Time max_time,
                              Orientation orientation);

// Reachability by exploring every strict journey explicitly.
DiGraph journeys_by_search(const TemporalGraph& g);

// Plain transitive closure, reach[u][v] for walks of length >= 1.
std::vector<std::vector<bool>> closure(const DiGraph& g);

// Strong components straight from mutual reachability.
Partition components_by_closure(const DiGraph& g);

bool acyclic_by_closure(const DiGraph& g);

} // namespace tcrs::test
