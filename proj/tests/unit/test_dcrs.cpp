#include "support.hpp"

#include "tcrs/dcrs.hpp"
#include "tcrs/dfvs.hpp"
#include "tcrs/errors.hpp"
#include "tcrs/oracles.hpp"

#include <doctest.h>

using namespace tcrs;
using namespace tcrs::test;

namespace {

std::vector<std::string> names(const DiGraph& g, const std::vector<Vertex>& vs)
{
    std::vector<std::string> out;
    for (auto v : vs)
        out.push_back(g.label(v));
    return out;
}

} // namespace

TEST_CASE("running example construction")
{
    auto r = fixture_request("fig3_r.json");
    CHECK(construct_component(r) == fixture_temporal("fig3_right.json"));

    auto solution = solve_dcrs(r);
    CHECK(solution.size() == 6);
    REQUIRE(solution.components.size() == 1);
    CHECK(names(r, solution.components[0].feedback_set) == std::vector<std::string>{"a", "c"});
    CHECK(names(r, solution.components[0].order) == std::vector<std::string>{"b", "d", "e"});
    CHECK(verify(solution.graph, r).satisfied);
    CHECK(min_dcrs_size(r) == 6);
}

TEST_CASE("degenerate components")
{
    CHECK(construct_component(DiGraph({"a"})).size() == 0);

    auto dag = digraph(letters(3), {{"a", "b"}, {"b", "c"}});
    auto path = construct_component(dag);
    CHECK(path.edges() == std::vector<TemporalEdge>{{0, 1, 2}, {1, 2, 3}});
    CHECK(min_dcrs_size(dag) == 2);

    CHECK_THROWS_AS(construct_component(DiGraph(letters(2))), NotConnected);
}

TEST_CASE("sizes across components")
{
    CHECK(solve_dcrs(DiGraph(letters(5))).size() == 0);

    auto two = digraph(letters(4), {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}});
    auto solution = solve_dcrs(two);
    CHECK(solution.size() == 4);
    CHECK(solution.components.size() == 2);
    CHECK(verify(solution.graph, two).satisfied);
    CHECK(brute_min_dcrs(two).k == 4);

    DiGraph k4(letters(4));
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            if (u != v)
                k4.add_arc(u, v);
    CHECK(min_dcrs_size(k4) == 6);
    CHECK(brute_min_dcrs(k4).k == 6);
}

TEST_CASE("construction structure on random request graphs")
{
    std::mt19937_64 rng(31);
    for (int i = 0; i < 500; ++i) {
        std::size_t n = 1 + i % 9;
        auto r = random_digraph(rng, n, 0.05 + 0.05 * (i % 10));
        auto solution = solve_dcrs(r);
        REQUIRE(verify(solution.graph, r).satisfied);

        std::size_t expected = 0;
        for (const auto& c : solution.components) {
            auto nc = c.vertices.size();
            auto f = c.feedback_set.size();
            auto m = c.order.size();
            CHECK(f + m == nc);
            CHECK(f == min_dfvs(induced_subgraph(r, c.vertices)).size());
            if (nc >= 2)
                expected += nc + f - 1;

            // Arcs into u_1 at time 1, the path at 2..m, arcs back at m + 1.
            std::size_t first = 0, last = 0, path = 0;
            for (const auto& e : solution.graph.edges()) {
                if (std::find(c.vertices.begin(), c.vertices.end(), e.u) == c.vertices.end())
                    continue;
                if (e.t == 1 && f > 0 && e.v == c.order.front())
                    ++first;
                else if (e.t == m + 1 && f > 0 && e.u == c.order.back())
                    ++last;
                else
                    ++path;
            }
            if (nc >= 2) {
                CHECK(first == f);
                CHECK(last == f);
                CHECK(path == m - 1);
            }
        }
        CHECK(solution.size() == expected);
        CHECK(solution.size() == n - connected_components(r).size() + [&] {
            std::size_t total = 0;
            for (const auto& block : connected_components(r))
                total += min_dfvs(induced_subgraph(r, block)).size();
            return total;
        }());
        CHECK(min_dcrs_size(r) == solution.size());
    }
}

TEST_CASE("directed optimum against the exhaustive oracle")
{
    std::mt19937_64 rng(32);
    for (int i = 0; i < 150; ++i) {
        auto r = random_digraph(rng, 2 + i % 4, 0.35);
        CHECK(brute_min_dcrs(r).k == min_dcrs_size(r));
    }
}

TEST_CASE("solutions are deterministic")
{
    auto r = fixture_request("fig3_r.json");
    CHECK(solve_dcrs(r).graph == solve_dcrs(r).graph);
}
