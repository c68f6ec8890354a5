#include "support.hpp"

#include "tcrs/io.hpp"

#include <algorithm>
#include <set>

#ifndef TCRS_FIXTURE_DIR
#error "TCRS_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace tcrs::test {

std::filesystem::path fixture_path(const std::string& name)
{
    return std::filesystem::path(TCRS_FIXTURE_DIR) / name;
}

DiGraph fixture_request(const std::string& name)
{
    return parse_request(read_file(fixture_path(name))).graph;
}

TemporalGraph fixture_temporal(const std::string& name)
{
    return parse_temporal(read_file(fixture_path(name))).graph;
}

std::vector<std::string> letters(std::size_t n)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

DiGraph digraph(std::vector<std::string> vertices, const std::vector<std::pair<std::string, std::string>>& arcs)
{
    DiGraph g(std::move(vertices));
    for (const auto& [u, v] : arcs)
        g.add_arc(u, v);
    return g;
}

DiGraph digraph_from_code(const Labels& labels, std::uint64_t code)
{
    DiGraph g(labels);
    auto n = static_cast<Vertex>(labels->size());
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) {
            if (u == v)
                continue;
            if (code >> bit & 1u)
                g.add_arc(u, v);
            ++bit;
        }
    return g;
}

std::uint64_t digraph_count(std::size_t n)
{
    return std::uint64_t{1} << (n * (n - 1));
}

DiGraph random_digraph(std::mt19937_64& rng, std::size_t n, double density)
{
    std::bernoulli_distribution coin(density);
    DiGraph g(letters(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v && coin(rng))
                g.add_arc(u, v);
    return g;
}

DiGraph random_strongly_connected(std::mt19937_64& rng, std::size_t n, double density)
{
    while (true) {
        auto g = random_digraph(rng, n, density);
        if (n <= 1 || is_strongly_connected(g))
            return g;
    }
}

TemporalGraph random_temporal(std::mt19937_64& rng, std::size_t n, std::size_t max_edges, Time max_time,
                              Orientation orientation)
{
    TemporalGraph g(letters(n), orientation);
    if (n < 2)
        return g;
    std::uniform_int_distribution<std::size_t> count(0, max_edges);
    std::uniform_int_distribution<Vertex> vertex(0, static_cast<Vertex>(n - 1));
    std::uniform_int_distribution<Time> time(1, max_time);
    std::set<TemporalEdge> seen;
    auto want = count(rng);
    for (std::size_t attempt = 0; attempt < 20 * max_edges && seen.size() < want; ++attempt) {
        auto u = vertex(rng), v = vertex(rng);
        if (u == v)
            continue;
        if (orientation == Orientation::undirected && u > v)
            std::swap(u, v);
        TemporalEdge e{u, v, time(rng)};
        if (seen.insert(e).second)
            g.add(e.u, e.v, e.t);
    }
    return g;
}

namespace {

void explore(const TemporalGraph& g, Vertex source, Vertex at, Time last, std::set<std::pair<Vertex, Time>>& seen,
             std::vector<bool>& reached)
{
    if (!seen.insert({at, last}).second)
        return;
    if (at != source)
        reached[at] = true;
    for (const auto& e : g.edges()) {
        if (e.t <= last)
            continue;
        if (e.u == at)
            explore(g, source, e.v, e.t, seen, reached);
        else if (!g.directed() && e.v == at)
            explore(g, source, e.u, e.t, seen, reached);
    }
}

} // namespace

DiGraph journeys_by_search(const TemporalGraph& g)
{
    DiGraph out(g.labels());
    auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex s = 0; s < n; ++s) {
        std::set<std::pair<Vertex, Time>> seen;
        std::vector<bool> reached(n, false);
        explore(g, s, s, 0, seen, reached);
        for (Vertex v = 0; v < n; ++v)
            if (reached[v])
                out.add_arc(s, v);
    }
    return out;
}

std::vector<std::vector<bool>> closure(const DiGraph& g)
{
    auto n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (auto arc : g.arcs())
        reach[arc.from][arc.to] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k][j])
                        reach[i][j] = true;
    return reach;
}

Partition components_by_closure(const DiGraph& g)
{
    auto n = g.vertex_count();
    auto reach = closure(g);
    Partition out;
    std::vector<bool> placed(n, false);
    for (Vertex u = 0; u < n; ++u) {
        if (placed[u])
            continue;
        std::vector<Vertex> block{u};
        placed[u] = true;
        for (Vertex v = u + 1; v < n; ++v)
            if (!placed[v] && reach[u][v] && reach[v][u]) {
                block.push_back(v);
                placed[v] = true;
            }
        out.push_back(block);
    }
    return out;
}

bool acyclic_by_closure(const DiGraph& g)
{
    auto reach = closure(g);
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (reach[v][v])
            return false;
    return true;
}

} // namespace tcrs::test
