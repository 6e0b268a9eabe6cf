#include "oracle.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace aboracle {

using abchrome::Coloring;
using abchrome::Graph;
using abchrome::VertexId;

bool forest_by_count(const Graph& g, const std::vector<VertexId>& keep) {
    const int n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (VertexId v : keep) in[v] = 1;
    std::vector<int> comp(n, -1);
    int components = 0, vertices = 0, edge_ends = 0;
    for (VertexId s = 0; s < n; ++s) {
        if (!in[s] || comp[s] != -1) continue;
        ++components;
        std::deque<VertexId> queue{s};
        comp[s] = components;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            ++vertices;
            for (VertexId w : g.neighbors(u)) {
                if (!in[w]) continue;
                ++edge_ends;
                if (comp[w] == -1) {
                    comp[w] = components;
                    queue.push_back(w);
                }
            }
        }
    }
    return edge_ends / 2 == vertices - components;
}

bool oracle_is_acyclic(const Graph& g, const Coloring& c) {
    for (int a = 1; a <= c.k; ++a) {
        for (int b = a + 1; b <= c.k; ++b) {
            std::vector<VertexId> keep;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (c.colors[v] == a || c.colors[v] == b) keep.push_back(v);
            if (!forest_by_count(g, keep)) return false;
        }
    }
    return true;
}

namespace {

bool oracle_is_proper(const Graph& g, const Coloring& c) {
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId w : g.neighbors(u))
            if (u < w && c.colors[u] == c.colors[w]) return false;
    return true;
}

std::vector<int> oracle_missing(const Graph& g, const Coloring& c, VertexId v) {
    std::vector<char> present(c.k + 1, 0);
    present[c.colors[v]] = 1;
    for (VertexId w : g.neighbors(v)) present[c.colors[w]] = 1;
    std::vector<int> out;
    for (int color = 1; color <= c.k; ++color)
        if (!present[color]) out.push_back(color);
    return out;
}

// every coloring = a set partition, walked as restricted growth strings
void for_each_partition(int n, const std::function<void(const Coloring&)>& visit) {
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int max_used) {
        if (i == n) {
            Coloring c(max_used, a);
            visit(c);
            return;
        }
        for (int color = 1; color <= std::min(n, max_used + 1); ++color) {
            a[i] = color;
            rec(i + 1, std::max(max_used, color));
        }
    };
    rec(0, 0);
}

bool class_has_step(const Graph& g, const Coloring& c, int class_color) {
    std::vector<VertexId> members;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (c.colors[v] == class_color) members.push_back(v);
    if (members.empty()) return false;
    std::vector<std::vector<int>> options;
    for (VertexId v : members) {
        options.push_back(oracle_missing(g, c, v));
        if (options.back().empty()) return false;  // b-vertex blocks the class
    }
    // full assignment product, no pruning
    std::vector<size_t> pick(members.size(), 0);
    while (true) {
        Coloring trial = c;
        for (size_t i = 0; i < members.size(); ++i) trial.colors[members[i]] = options[i][pick[i]];
        if (oracle_is_proper(g, trial) && oracle_is_acyclic(g, trial)) return true;
        size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < options[i].size()) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) return false;
    }
}

}  // namespace

bool oracle_is_minimal(const Graph& g, const Coloring& c) {
    for (int color = 1; color <= c.k; ++color)
        if (class_has_step(g, c, color)) return false;
    return true;
}

int oracle_A(const Graph& g) {
    int best = g.vertex_count();
    for_each_partition(g.vertex_count(), [&](const Coloring& c) {
        if (c.k >= best) return;
        if (oracle_is_proper(g, c) && oracle_is_acyclic(g, c)) best = c.k;
    });
    return best;
}

int oracle_phi(const Graph& g) {
    int best = 0;
    for_each_partition(g.vertex_count(), [&](const Coloring& c) {
        if (c.k <= best || !oracle_is_proper(g, c)) return;
        for (int color = 1; color <= c.k; ++color) {
            bool has_b = false;
            for (VertexId v = 0; v < g.vertex_count() && !has_b; ++v)
                has_b = c.colors[v] == color && oracle_missing(g, c, v).empty();
            if (!has_b) return;
        }
        best = c.k;
    });
    return best;
}

int oracle_Ab(const Graph& g) {
    int best = 0;
    for_each_partition(g.vertex_count(), [&](const Coloring& c) {
        if (c.k <= best || !oracle_is_proper(g, c) || !oracle_is_acyclic(g, c)) return;
        if (oracle_is_minimal(g, c)) best = c.k;
    });
    return best;
}

std::optional<int> oracle_girth(const Graph& g) {
    int best = -1;
    const int n = g.vertex_count();
    for (auto [a, b] : g.edges()) {
        // BFS from a to b avoiding the edge (a,b)
        std::vector<int> dist(n, -1);
        dist[a] = 0;
        std::deque<VertexId> queue{a};
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            for (VertexId w : g.neighbors(u)) {
                if (u == a && w == b) continue;
                if (dist[w] != -1) continue;
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
        if (dist[b] != -1 && (best == -1 || dist[b] + 1 < best)) best = dist[b] + 1;
    }
    if (best == -1) return std::nullopt;
    return best;
}

}  // namespace aboracle
