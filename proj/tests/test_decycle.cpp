#include "doctest.h"

#include <random>

#include "abchrome/families.hpp"
#include "abchrome/solver.hpp"
#include "fixtures.hpp"

using namespace abchrome;

TEST_CASE("an already acyclic coloring is returned unchanged") {
    auto fx = gen_sporadic(Sporadic::Petersen);
    DecycleStats stats;
    Coloring out = decycle_4coloring(fx.named.graph, fx.coloring, &stats);
    CHECK(out.colors == fx.coloring.colors);
    CHECK(out.k == fx.coloring.k);
    CHECK(stats.iterations == 0);
}

TEST_CASE("the bi-colored four-cycle of K33 is repaired") {
    auto k33 = gen_sporadic(Sporadic::K33).named.graph;
    Coloring start(4, {1, 1, 3, 2, 2, 4});
    CHECK(is_proper(k33, start));
    CHECK_FALSE(is_acyclic(k33, start));
    DecycleStats stats;
    Coloring fixed = decycle_4coloring(k33, start, &stats);
    CHECK(is_proper(k33, fixed));
    CHECK(is_acyclic(k33, fixed));
    CHECK(colors_used(fixed) <= 4);
    CHECK(stats.iterations >= 1);
    for (size_t i = 1; i < stats.potential_trace.size(); ++i)
        CHECK(stats.potential_trace[i] < stats.potential_trace[i - 1]);
}

TEST_CASE("random proper 4-colorings are de-cycled with monotone progress") {
    std::mt19937 rng(271828);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 4 + 2 * (trial % 9);  // 4 .. 20
        Graph g = abfix::random_cubic_graph(n, rng);
        Coloring start = abfix::random_proper_4coloring(g, rng);
        REQUIRE(is_proper(g, start));
        DecycleStats stats;
        Coloring fixed = decycle_4coloring(g, start, &stats);
        CHECK(is_proper(g, fixed));
        CHECK(is_acyclic(g, fixed));
        CHECK(colors_used(fixed) <= 4);
        for (size_t i = 1; i < stats.potential_trace.size(); ++i)
            CHECK(stats.potential_trace[i] < stats.potential_trace[i - 1]);
        CHECK(stats.potential_trace.back() == 0);
    }
}

TEST_CASE("de-cycling input validation") {
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(decycle_4coloring(path, Coloring(3, {1, 2, 3})), ColoringError);

    auto k33 = gen_sporadic(Sporadic::K33).named.graph;
    CHECK_THROWS_AS(decycle_4coloring(k33, Coloring(4, {1, 2, 1, 1, 2, 2})), ColoringError);
    CHECK_THROWS_AS(decycle_4coloring(k33, Coloring(6, {1, 2, 3, 4, 5, 6})), ColoringError);
}
