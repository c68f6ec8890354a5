#include "support.hpp"

#include "tcrs/dfvs.hpp"
#include "tcrs/errors.hpp"

#include <doctest.h>

#include <bit>

using namespace tcrs;
using namespace tcrs::test;

namespace {

std::vector<Vertex> members(std::uint32_t mask)
{
    std::vector<Vertex> out;
    for (; mask; mask &= mask - 1)
        out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    return out;
}

bool hits_every_circuit(const DiGraph& g, std::uint32_t removed)
{
    std::vector<Vertex> rest;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (!(removed >> v & 1u))
            rest.push_back(v);
    return acyclic_by_closure(induced_subgraph(g, rest));
}

// Smallest size, then lexicographically smallest sorted vertex list, via
// transitive closure only.
std::vector<Vertex> reference_dfvs(const DiGraph& g)
{
    auto n = g.vertex_count();
    std::optional<std::vector<Vertex>> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (best && static_cast<std::size_t>(std::popcount(mask)) > best->size())
            continue;
        if (!hits_every_circuit(g, mask))
            continue;
        auto set = members(mask);
        if (!best || set.size() < best->size() || (set.size() == best->size() && set < *best))
            best = set;
    }
    return *best;
}

std::vector<Vertex> at(const DiGraph& g, std::initializer_list<const char*> labels)
{
    std::vector<Vertex> out;
    for (auto l : labels)
        out.push_back(g.vertex(l));
    return out;
}

} // namespace

TEST_CASE("feedback set recognition")
{
    auto fig3 = fixture_request("fig3_r.json");
    CHECK(is_dfvs(fig3, at(fig3, {"a", "c"})));
    CHECK_FALSE(is_dfvs(fig3, at(fig3, {"a"})));
    auto dag = digraph(letters(3), {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(is_dfvs(dag, std::vector<Vertex>{}));
    CHECK_THROWS_AS(is_dfvs(dag, std::vector<Vertex>{5}), UnknownVertex);
}

TEST_CASE("minimum feedback sets of small examples")
{
    auto fig3 = fixture_request("fig3_r.json");
    CHECK(min_dfvs(fig3).vertices == at(fig3, {"a", "c"}));

    auto triangle = digraph(letters(3), {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(min_dfvs(triangle).vertices == at(triangle, {"a"}));
    CHECK(min_dfvs(digraph(letters(3), {{"a", "b"}, {"b", "c"}})).size() == 0);
    CHECK(min_dfvs(DiGraph()).size() == 0);

    DiGraph k4(letters(4));
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            if (u != v)
                k4.add_arc(u, v);
    CHECK(min_dfvs(k4).vertices == std::vector<Vertex>{0, 1, 2});

    // The lexicographic tie-break follows labels, not insertion order.
    auto relabeled = digraph({"z", "y", "x"}, {{"z", "y"}, {"y", "x"}, {"x", "z"}});
    CHECK(relabeled.label(min_dfvs(relabeled).vertices[0]) == "x");
}

TEST_CASE("minimum feedback sets match subset enumeration exhaustively")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        auto labels = LabelSet::make(letters(n));
        for (std::uint64_t code = 0; code < digraph_count(n); ++code) {
            auto g = digraph_from_code(labels, code);
            auto f = min_dfvs(g);
            REQUIRE(f.vertices == reference_dfvs(g));
            CHECK(f.vertices == detail::min_dfvs_by_enumeration(g).vertices);
        }
    }
}

TEST_CASE("minimum feedback sets on random digraphs up to ten vertices")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 400; ++i) {
        std::size_t n = 5 + i % 6;
        auto g = random_digraph(rng, n, 0.1 + 0.05 * (i % 8));
        auto f = min_dfvs(g);
        REQUIRE(is_dfvs(g, f.vertices));
        CHECK(f.size() <= (n ? n - 1 : 0));
        // No set one smaller works.
        if (f.size() > 0) {
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
                if (static_cast<std::size_t>(std::popcount(mask)) == f.size() - 1)
                    REQUIRE_FALSE(hits_every_circuit(g, mask));
        }
        CHECK(f.vertices == detail::min_dfvs_by_enumeration(g).vertices);
    }
}

TEST_CASE("larger instances agree with the enumeration cross-check")
{
    std::mt19937_64 rng(22);
    for (int i = 0; i < 20; ++i) {
        auto g = random_digraph(rng, 14, 0.15);
        CHECK(min_dfvs(g).vertices == detail::min_dfvs_by_enumeration(g).vertices);
    }
    for (int i = 0; i < 10; ++i) {
        auto g = random_digraph(rng, 40, 0.05);
        auto f = min_dfvs(g);
        CHECK(is_dfvs(g, f.vertices));
    }
    std::vector<std::string> many;
    for (int k = 0; k < 65; ++k)
        many.push_back("v" + std::to_string(k));
    CHECK_THROWS_AS(min_dfvs(DiGraph(many)), TooLarge);
}

TEST_CASE("adding arcs never shrinks the minimum")
{
    std::mt19937_64 rng(23);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 3 + i % 6;
        DiGraph g(letters(n));
        std::size_t last = 0;
        std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
        for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
            auto u = pick(rng), v = pick(rng);
            if (u == v)
                continue;
            g.add_arc(u, v);
            auto f = min_dfvs(g).size();
            CHECK(f >= last);
            last = f;
        }
    }
}

TEST_CASE("feedback sets of reachability graphs are bounded by |E| + cc - n")
{
    std::mt19937_64 rng(24);
    for (int i = 0; i < 1000; ++i) {
        auto g = random_temporal(rng, 1 + i % 7, 12, 6, Orientation::directed);
        auto p = g.size() + connected_components(footprint(g)).size() - g.vertex_count();
        CHECK(min_dfvs(reachability_graph(g)).size() <= p);
    }
}
