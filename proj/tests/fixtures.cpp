#include "fixtures.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

namespace abfix {

using abchrome::Coloring;
using abchrome::CubicTree;
using abchrome::Graph;
using abchrome::VertexId;

const ColoredGraph& blocked48() {
    static const ColoredGraph fixture = [] {
        // id layout: 0..27 the seven 4-vertex blocks a..d, a1..d1, ..., a6..d6;
        // 28..47 the four K5-minus-perfect-matching pods u,v,w,x,y per corner
        std::vector<std::pair<VertexId, VertexId>> edges = {
            {5, 4},   {4, 0},   {0, 1},   {1, 2},   {2, 3},   {3, 6},   {6, 11},  {11, 10},
            {10, 9},  {9, 8},   {8, 4},   {1, 5},   {5, 9},   {6, 7},   {7, 12},  {12, 13},
            {13, 14}, {14, 15}, {15, 18}, {18, 17}, {17, 16}, {16, 11}, {15, 19}, {19, 17},
            {19, 13}, {7, 20},  {20, 21}, {21, 22}, {22, 23}, {23, 26}, {26, 25}, {25, 24},
            {24, 3},  {23, 27}, {27, 25}, {27, 21}, {26, 24}, {22, 20}, {16, 18}, {12, 14},
            {0, 28},  {28, 29}, {29, 31}, {31, 32}, {32, 30}, {30, 28}, {29, 32}, {30, 31},
            {10, 33}, {33, 34}, {34, 36}, {36, 37}, {37, 35}, {35, 33}, {34, 37}, {35, 36},
            {2, 38},  {38, 39}, {39, 41}, {41, 42}, {42, 40}, {40, 38}, {39, 42}, {40, 41},
            {8, 43},  {43, 44}, {44, 46}, {46, 47}, {47, 45}, {45, 43}, {44, 47}, {45, 46},
        };
        ColoredGraph out;
        out.graph = Graph::from_edges(48, edges);
        out.coloring = Coloring(
            5, {4, 2, 3, 2, 2, 1, 1, 2, 5, 2, 3, 2, 5, 2, 4, 2, 5, 2, 3, 1, 4, 2, 3, 2,
                4, 2, 5, 1, 3, 1, 1, 2, 5, 2, 1, 1, 4, 5, 5, 1, 1, 2, 4, 4, 1, 1, 2, 3});
        out.designated = {6, 28, 33, 38, 43};
        return out;
    }();
    return fixture;
}

std::vector<std::string> load_corpus_lines(const std::string& filename) {
    std::ifstream in(std::string(ABCHROME_TEST_DATA_DIR) + "/" + filename);
    if (!in) throw std::runtime_error("missing test data file: " + filename);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

Graph random_cubic_graph(int n, std::mt19937& rng) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("cubic graphs need even n >= 4");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(3 * n);
        for (int v = 0; v < n; ++v)
            for (int s = 0; s < 3; ++s) stubs.push_back(v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<VertexId, VertexId>> edges;
        bool ok = true;
        std::set<std::pair<int, int>> seen;
        for (size_t i = 0; i < stubs.size() && ok; i += 2) {
            int a = stubs[i], b = stubs[i + 1];
            if (a == b) ok = false;
            auto key = std::minmax(a, b);
            if (ok && !seen.insert(key).second) ok = false;
            if (ok) edges.emplace_back(a, b);
        }
        if (ok) return Graph::from_edges(n, edges);
    }
    throw std::runtime_error("configuration model failed to produce a simple cubic graph");
}

Coloring random_proper_4coloring(const Graph& g, std::mt19937& rng) {
    const int n = g.vertex_count();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> col(n, 0);
    for (VertexId v : order) {
        std::vector<int> feasible;
        for (int color = 1; color <= 4; ++color) {
            bool taken = false;
            for (VertexId u : g.neighbors(v)) taken = taken || col[u] == color;
            if (!taken) feasible.push_back(color);
        }
        col[v] = feasible[std::uniform_int_distribution<size_t>(0, feasible.size() - 1)(rng)];
    }
    return Coloring(4, col);
}

CubicTree random_cubic_tree(int leaves, std::mt19937& rng) {
    CubicTree t;
    t.n = 2;
    t.edges = {{0, 1}};
    std::vector<int> leaf_ids = {0, 1};
    while (static_cast<int>(leaf_ids.size()) < leaves) {
        size_t pick = std::uniform_int_distribution<size_t>(0, leaf_ids.size() - 1)(rng);
        int grow = leaf_ids[pick];
        leaf_ids.erase(leaf_ids.begin() + pick);
        int a = t.n++, b = t.n++;
        t.edges.emplace_back(grow, a);
        t.edges.emplace_back(grow, b);
        leaf_ids.push_back(a);
        leaf_ids.push_back(b);
    }
    return t;
}

Coloring random_acyclic_coloring(const Graph& g, int k, std::mt19937& rng) {
    const int n = g.vertex_count();
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> col(n, 0);

    auto creates_bicolored_cycle = [&](VertexId v, int color) {
        for (int m = 1; m <= k; ++m) {
            if (m == color) continue;
            // component scan of the {color,m} view minus v over colored vertices
            std::vector<VertexId> anchors;
            for (VertexId w : g.neighbors(v))
                if (col[w] == color || col[w] == m) anchors.push_back(w);
            if (anchors.size() < 2) continue;
            std::vector<int> comp(n, -1);
            int cid = 0;
            bool cycle = false;
            for (VertexId a : anchors) {
                if (comp[a] != -1) {
                    cycle = true;
                    break;
                }
                comp[a] = cid;
                std::vector<VertexId> stack{a};
                while (!stack.empty()) {
                    VertexId u = stack.back();
                    stack.pop_back();
                    for (VertexId w : g.neighbors(u)) {
                        if (w == v || comp[w] != -1) continue;
                        if (col[w] != color && col[w] != m) continue;
                        comp[w] = cid;
                        stack.push_back(w);
                    }
                }
                ++cid;
            }
            if (cycle) return true;
        }
        return false;
    };

    auto dfs = [&](auto&& self, size_t idx) -> bool {
        if (idx == order.size()) return true;
        VertexId v = order[idx];
        std::vector<int> colors(k);
        std::iota(colors.begin(), colors.end(), 1);
        std::shuffle(colors.begin(), colors.end(), rng);
        for (int color : colors) {
            bool taken = false;
            for (VertexId u : g.neighbors(v)) taken = taken || col[u] == color;
            if (taken) continue;
            if (creates_bicolored_cycle(v, color)) continue;
            col[v] = color;
            if (self(self, idx + 1)) return true;
            col[v] = 0;
        }
        return false;
    };
    if (!dfs(dfs, 0)) throw std::runtime_error("no acyclic coloring found at this k");
    return Coloring(k, col);
}

}  // namespace abfix
