#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

#include "abchrome/graph.hpp"

namespace abchrome::detail {

constexpr int kCycleInf = std::numeric_limits<int>::max() / 4;

// The probes below operate on the subgraph induced by {v} + {x : include(x)}.
// include(v) itself is never consulted.

// True iff some cycle of the view passes through v, i.e. two view-neighbors
// of v are connected in view - v.
template <typename Include>
bool cycle_through_vertex_exists(const Graph& g, VertexId v, Include include) {
    std::vector<VertexId> anchors;
    for (VertexId w : g.neighbors(v))
        if (include(w)) anchors.push_back(w);
    if (anchors.size() < 2) return false;
    std::vector<int> comp(g.vertex_count(), -1);
    int comp_id = 0;
    for (VertexId a : anchors) {
        if (comp[a] != -1) return true;
        comp[a] = comp_id;
        std::deque<VertexId> queue{a};
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(u)) {
                if (w == v || !include(w) || comp[w] != -1) continue;
                comp[w] = comp_id;
                queue.push_back(w);
            }
        }
        ++comp_id;
    }
    return false;
}

template <typename Include>
int shortest_cycle_through_vertex(const Graph& g, VertexId v, Include include) {
    std::vector<VertexId> anchors;
    for (VertexId w : g.neighbors(v))
        if (include(w)) anchors.push_back(w);
    if (anchors.size() < 2) return kCycleInf;
    int best = kCycleInf;
    std::vector<int> dist(g.vertex_count());
    for (size_t i = 0; i + 1 < anchors.size(); ++i) {
        std::fill(dist.begin(), dist.end(), kCycleInf);
        dist[anchors[i]] = 0;
        std::deque<VertexId> queue{anchors[i]};
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(u)) {
                if (w == v || !include(w) || dist[w] != kCycleInf) continue;
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
        for (size_t j = i + 1; j < anchors.size(); ++j)
            if (dist[anchors[j]] != kCycleInf) best = std::min(best, dist[anchors[j]] + 2);
    }
    return best;
}

// Lexicographically smallest cycle sequence of exactly `len` vertices starting
// at v inside the view, or empty when none exists.
template <typename Include>
std::vector<VertexId> lex_min_cycle_through_vertex(const Graph& g, VertexId v, int len,
                                                   Include include) {
    const int n = g.vertex_count();
    std::vector<int> dist_to_v(n, kCycleInf);
    dist_to_v[v] = 0;
    std::deque<VertexId> queue{v};
    while (!queue.empty()) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(u)) {
            if (w == v || !include(w) || dist_to_v[w] != kCycleInf) continue;
            dist_to_v[w] = dist_to_v[u] + 1;
            queue.push_back(w);
        }
    }
    std::vector<char> on_path(n, 0);
    std::vector<VertexId> path{v};
    on_path[v] = 1;
    std::vector<VertexId> result;

    auto dfs = [&](auto&& self) -> bool {
        const int have = static_cast<int>(path.size());
        VertexId u = path.back();
        if (have == len) {
            if (g.adjacent(u, v)) {
                result = path;
                return true;
            }
            return false;
        }
        for (VertexId w : g.neighbors(u)) {
            if (w == v || !include(w) || on_path[w]) continue;
            if (have + dist_to_v[w] > len) continue;
            on_path[w] = 1;
            path.push_back(w);
            if (self(self)) return true;
            path.pop_back();
            on_path[w] = 0;
        }
        return false;
    };
    dfs(dfs);
    return result;
}

}  // namespace abchrome::detail
