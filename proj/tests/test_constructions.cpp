#include "doctest.h"

#include <algorithm>
#include <set>

#include "abchrome/constructions.hpp"
#include "abchrome/families.hpp"
#include "abchrome/solver.hpp"

using namespace abchrome;

namespace {

void check_anchor_diagnostics(const Graph& g, const ConstructedColoring& built) {
    std::set<int> anchor_colors;
    for (VertexId anchor : built.designated) {
        anchor_colors.insert(built.coloring.colors[anchor]);
        CHECK(classify_ab_vertex_shape(g, built.coloring, anchor) == AbShape::TypeB);
        BlockReport report = blocking_report(g, built.coloring, anchor);
        CHECK(report.entries.size() == 2);
        CHECK(report.fully_blocked());
    }
    CHECK(anchor_colors == std::set<int>{1, 2, 3, 4, 5});
}

}  // namespace

TEST_CASE("five-coloring of G(25,3)") {
    auto built = color_gp5(25, 3);
    const Graph g = gen_petersen(25, 3).graph;
    CHECK(built.coloring.k == 5);
    CHECK(colors_used(built.coloring) == 5);
    CHECK(is_acyclic(g, built.coloring));
    CHECK(is_ab_minimal(g, built.coloring).minimal);
    CHECK(built.designated_names ==
          std::vector<std::string>{"x0", "x5", "x10", "x15", "x20"});
    check_anchor_diagnostics(g, built);
    CHECK_FALSE(built.palette_fallback);

    // the blocking cycle for the c1 candidate at x0 is the segment cycle
    // x0 x-1 x-2 x-3 y-3 y0 of the construction
    const SegmentPalette p0 = detail::gp5_palette_chain(25, 3)[0];
    BlockReport report = blocking_report(g, built.coloring, 0);
    const BlockEntry* c1_entry = nullptr;
    for (const auto& entry : report.entries)
        if (entry.candidate == p0[1]) c1_entry = &entry;
    REQUIRE(c1_entry != nullptr);
    REQUIRE_FALSE(c1_entry->free());
    CHECK(c1_entry->cycle->length() == 6);
    std::set<VertexId> got(c1_entry->cycle->vertices.begin(), c1_entry->cycle->vertices.end());
    CHECK(got == std::set<VertexId>{0, 24, 23, 22, 25 + 22, 25 + 0});
}

TEST_CASE("five-coloring of G(26,3), the single-overlap case") {
    auto built = color_gp5(26, 3);
    const Graph g = gen_petersen(26, 3).graph;
    CHECK(is_acyclic(g, built.coloring));
    CHECK(is_ab_minimal(g, built.coloring).minimal);
    check_anchor_diagnostics(g, built);

    // the modified gluing must close up: (c4^3, c4^2) = (c0^3, c0^1)
    auto chain = detail::gp5_palette_chain(26, 3);
    CHECK(chain[4][3] == chain[0][3]);
    CHECK(chain[4][2] == chain[0][1]);
}

TEST_CASE("gp5 palette chains are permutations with distinct anchor colors") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{25, 3}, {26, 3}, {30, 3}, {45, 4}}) {
        auto chain = detail::gp5_palette_chain(n, k);
        REQUIRE(chain.size() == 5);
        std::set<int> anchor_colors;
        for (const auto& p : chain) {
            std::set<int> entries(p.c.begin(), p.c.end());
            CHECK(entries == std::set<int>{1, 2, 3, 4, 5});
            anchor_colors.insert(p[0]);
        }
        CHECK(anchor_colors.size() == 5);
        for (int i = 0; i + 1 < 5; ++i) {
            CHECK(chain[i][2] == chain[i + 1][3]);
            CHECK(chain[i][3] == chain[i + 1][1]);
        }
    }
}

TEST_CASE("gp5 parameter validation") {
    CHECK_THROWS_AS(color_gp5(20, 3), ConstructionError);
    try {
        color_gp5(20, 3);
    } catch (const ConstructionError& e) {
        CHECK(e.kind() == ConstructionError::Kind::ParameterBelowBound);
        CHECK(std::string(e.what()).find("25") != std::string::npos);
    }
    CHECK_THROWS_AS(color_gp5(30, 2), ConstructionError);
    CHECK_THROWS_AS(color_gp5(44, 4), ConstructionError);
}

TEST_CASE("five-coloring of a (0,2)-prism with rims of length 20") {
    auto built = color_0j_prism5(20, 2);
    const Graph g = gen_0j_prism(20, 2).graph;
    CHECK(is_acyclic(g, built.coloring));
    CHECK(is_ab_minimal(g, built.coloring).minimal);
    CHECK(built.designated_names ==
          std::vector<std::string>{"v_1^1", "v_5^1", "v_9^1", "v_13^1", "v_17^1"});
    check_anchor_diagnostics(g, built);
}

TEST_CASE("prism5 parameter validation") {
    CHECK_THROWS_AS(color_0j_prism5(18, 2), ConstructionError);
    CHECK_THROWS_AS(color_0j_prism5(20, 0), ConstructionError);
    CHECK_THROWS_AS(color_0j_prism5(20, 3), ConstructionError);
    CHECK_THROWS_AS(color_0j_prism5(21, 2), ConstructionError);
    // below the theorem bound: 24 < 5(4+2)
    CHECK_THROWS_AS(color_0j_prism5(24, 4), ConstructionError);
}

TEST_CASE("five-coloring of a (0,4)-prism at the bound") {
    auto built = color_0j_prism5(30, 4);
    const Graph g = gen_0j_prism(30, 4).graph;
    CHECK(is_acyclic(g, built.coloring));
    CHECK(is_ab_minimal(g, built.coloring).minimal);
    check_anchor_diagnostics(g, built);
}

TEST_CASE("four-coloring of C(T)") {
    CubicTree k13{4, {{0, 1}, {0, 2}, {0, 3}}};
    auto named = gen_C_of_T(k13);
    Coloring coloring = color_C_of_T4(k13);
    CHECK(named.graph.vertex_count() == 24);
    CHECK(coloring.k == 4);
    CHECK(is_acyclic(named.graph, coloring));
    CHECK(is_ab_minimal(named.graph, coloring).minimal);

    // every leaf copy carries a b-vertex of each of the four colors
    for (int leaf = 0; leaf < 3; ++leaf) {
        int base = 3 + 7 * leaf;
        std::set<int> b_colors;
        for (int s = 0; s < 7; ++s) {
            VertexId v = base + s;
            if (missing_colors(named.graph, coloring, v).empty())
                b_colors.insert(coloring.colors[v]);
        }
        CHECK(b_colors == std::set<int>{1, 2, 3, 4});
    }

    CubicTree k2{2, {{0, 1}}};
    auto named2 = gen_C_of_T(k2);
    Coloring coloring2 = color_C_of_T4(k2);
    CHECK(named2.graph.vertex_count() == 14);
    CHECK(is_ab_minimal(named2.graph, coloring2).minimal);

    CHECK_THROWS_AS(color_C_of_T4(CubicTree{3, {{0, 1}, {1, 2}}}), FamilyError);
}

TEST_CASE("prism_ab4") {
    for (int n : {4, 10}) {
        Coloring c = prism_ab4(n);
        const Graph g = gen_petersen(n, 1).graph;
        CHECK(colors_used(c) == 4);
        CHECK(is_acyclic(g, c));
        CHECK(is_ab_minimal(g, c).minimal);
    }
    CHECK_THROWS_WITH_AS(prism_ab4(3), doctest::Contains("K2 x K3"), ConstructionError);
    CHECK_THROWS_AS(prism_ab4(2), ConstructionError);
}

TEST_CASE("segment cells follow the fixed pattern tables under the palette") {
    // expected offsets written out a second time, independent of the builder
    {
        auto built = color_gp5(25, 3);
        auto chain = detail::gp5_palette_chain(25, 3);
        const auto& col = built.coloring.colors;
        const int n = 25;
        auto x = [&](int t) { return col[((t % n) + n) % n]; };
        auto y = [&](int t) { return col[n + ((t % n) + n) % n]; };
        for (int seg = 0; seg < 5; ++seg) {
            const int j = 5 * seg;
            const SegmentPalette& p = chain[seg];
            CHECK(x(j) == p[0]);
            CHECK(x(j + 1) == p[4]);
            CHECK(x(j - 1) == p[3]);
            CHECK(x(j - 2) == p[1]);
            CHECK(x(j - 3) == p[3]);
            CHECK(x(j + 2) == p[2]);
            CHECK(x(j + 3) == p[3]);
            CHECK(y(j) == p[3]);
            CHECK(y(j - 1) == p[2]);
            CHECK(y(j - 3) == p[1]);
            CHECK(y(j + 2) == p[3]);
            CHECK(y(j + 3) == p[2]);
        }
    }
    {
        auto built = color_gp5(45, 4);
        auto chain = detail::gp5_palette_chain(45, 4);
        const auto& col = built.coloring.colors;
        const int n = 45;
        auto x = [&](int t) { return col[((t % n) + n) % n]; };
        auto y = [&](int t) { return col[n + ((t % n) + n) % n]; };
        for (int seg = 0; seg < 5; ++seg) {
            const int j = 9 * seg;
            const SegmentPalette& p = chain[seg];
            CHECK(x(j) == p[0]);
            CHECK(x(j + 1) == p[4]);
            CHECK(x(j - 1) == p[3]);
            CHECK(x(j - 2) == p[2]);
            CHECK(x(j - 4) == p[3]);
            CHECK(x(j - 5) == p[1]);
            CHECK(x(j + 2) == p[3]);
            CHECK(x(j + 3) == p[2]);
            CHECK(x(j + 4) == p[3]);
            CHECK(y(j) == p[3]);
            CHECK(y(j - 1) == p[1]);
            CHECK(y(j - 2) == p[3]);
            CHECK(y(j - 4) == p[1]);
            CHECK(y(j - 5) == p[3]);
            CHECK(y(j + 2) == p[2]);
            CHECK(y(j + 4) == p[2]);
        }
    }
    {
        auto built = color_0j_prism5(20, 2);
        auto chain = detail::prism5_palette_chain();
        const auto& col = built.coloring.colors;
        const int rim = 20;
        auto v1 = [&](int t) { return col[((t % rim) + rim) % rim]; };
        auto v2 = [&](int t) { return col[rim + ((t % rim) + rim) % rim]; };
        for (int seg = 0; seg < 5; ++seg) {
            const int a = 4 * seg + 1;
            const SegmentPalette& p = chain[seg];
            CHECK(v1(a - 1) == p[4]);
            CHECK(v1(a) == p[0]);
            CHECK(v1(a + 1) == p[3]);
            CHECK(v1(a + 2) == p[2]);
            CHECK(v1(a + 3) == p[3]);
            CHECK(v2(a + 1) == p[1]);
            CHECK(v2(a + 2) == p[3]);
            CHECK(v2(a + 3) == p[2]);
        }
    }
}
