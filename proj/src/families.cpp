#include "abchrome/families.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace abchrome {

namespace {

// H3 gadget, one frozen edge-list fixture all code refers to; vertex roles
// are w=0 (the degree-two vertex), u=1, v=2, x=3, y=4, p=5, q=6.
constexpr std::pair<int, int> kH3Edges[10] = {
    {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6},
};
const char* kH3Names[7] = {"w", "u", "v", "x", "y", "p", "q"};

// colors of u,v,x,y,p,q in the fixed per-copy pattern
const std::vector<int> kH3PatternColors = {4, 3, 3, 4, 1, 2};

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

VertexId NamedGraph::id_of(const std::string& name) const {
    for (VertexId v = 0; v < static_cast<VertexId>(names.size()); ++v)
        if (names[v] == name) return v;
    throw std::out_of_range("no vertex named " + name);
}

void validate_cubic_tree(const CubicTree& t) {
    if (t.n < 2 || t.edges.empty())
        throw FamilyError(FamilyError::Kind::InvalidTree,
                          "cubic tree needs at least one edge (two vertices)");
    if (static_cast<int>(t.edges.size()) != t.n - 1)
        throw FamilyError(FamilyError::Kind::InvalidTree,
                          "tree on " + std::to_string(t.n) + " vertices must have " +
                              std::to_string(t.n - 1) + " edges, got " +
                              std::to_string(t.edges.size()));
    Graph g;
    try {
        g = Graph::from_edges(t.n, t.edges);
    } catch (const GraphError& e) {
        throw FamilyError(FamilyError::Kind::InvalidTree, std::string("invalid tree: ") + e.what());
    }
    std::vector<char> seen(t.n, 0);
    std::deque<int> queue{0};
    seen[0] = 1;
    int reached = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        ++reached;
        for (VertexId w : g.neighbors(u))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    if (reached != t.n)
        throw FamilyError(FamilyError::Kind::InvalidTree, "tree is not connected");
    for (int v = 0; v < t.n; ++v)
        if (g.degree(v) != 1 && g.degree(v) != 3)
            throw FamilyError(FamilyError::Kind::InvalidTree,
                              "vertex " + std::to_string(v) + " has degree " +
                                  std::to_string(g.degree(v)) +
                                  "; cubic trees allow only degrees 1 and 3");
}

int cubic_tree_inner_count(const CubicTree& t) {
    std::vector<int> deg(t.n, 0);
    for (auto [a, b] : t.edges) {
        ++deg[a];
        ++deg[b];
    }
    return static_cast<int>(std::count(deg.begin(), deg.end(), 3));
}

int cubic_tree_leaf_count(const CubicTree& t) {
    std::vector<int> deg(t.n, 0);
    for (auto [a, b] : t.edges) {
        ++deg[a];
        ++deg[b];
    }
    return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

NamedGraph gen_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw FamilyError(FamilyError::Kind::KOutOfRange,
                          "G(n,k) requires 1 <= k < n/2, got n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, mod(i + 1, n));          // polygon x_i x_{i+1}
        edges.emplace_back(n + i, n + mod(i + k, n));  // star polygon y_i y_{i+k}
        edges.emplace_back(i, n + i);                  // spoke x_i y_i
    }
    NamedGraph out;
    out.graph = Graph::from_edges(2 * n, edges);
    out.names.resize(2 * n);
    for (int i = 0; i < n; ++i) {
        out.names[i] = "x" + std::to_string(i);
        out.names[n + i] = "y" + std::to_string(i);
    }
    return out;
}

NamedGraph gen_0j_prism(int rim_len, int j) {
    if (rim_len < 4 || rim_len % 2 != 0)
        throw FamilyError(FamilyError::Kind::ParityViolation,
                          "rim length must be even and at least 4, got " + std::to_string(rim_len));
    if (j % 2 != 0)
        throw FamilyError(FamilyError::Kind::ParityViolation,
                          "spoke offset j must be even, got " + std::to_string(j));
    if (j < 0 || j > rim_len / 2)
        throw FamilyError(FamilyError::Kind::JOutOfRange,
                          "spoke offset j must satisfy 0 <= j <= rim_len/2, got " +
                              std::to_string(j));
    auto upper = [&](int t) { return mod(t, rim_len); };
    auto lower = [&](int t) { return rim_len + mod(t, rim_len); };
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int t = 0; t < rim_len; ++t) {
        edges.emplace_back(upper(t), upper(t + 1));
        edges.emplace_back(lower(t), lower(t + 1));
    }
    for (int t = 0; t < rim_len / 2; ++t) {
        edges.emplace_back(upper(2 * t), lower(2 * t));          // type 0
        edges.emplace_back(upper(2 * t + 1), lower(2 * t + 1 + j));  // type j
    }
    NamedGraph out;
    out.graph = Graph::from_edges(2 * rim_len, edges);
    out.names.resize(2 * rim_len);
    for (int t = 0; t < rim_len; ++t) {
        out.names[t] = "v_" + std::to_string(t) + "^1";
        out.names[rim_len + t] = "v_" + std::to_string(t) + "^2";
    }
    return out;
}

NamedGraph gen_H3() {
    NamedGraph out;
    std::vector<std::pair<VertexId, VertexId>> edges(std::begin(kH3Edges), std::end(kH3Edges));
    out.graph = Graph::from_edges(7, edges);
    out.names.assign(std::begin(kH3Names), std::end(kH3Names));
    return out;
}

const std::vector<int>& h3_pattern_colors() { return kH3PatternColors; }

NamedGraph gen_C_of_T(const CubicTree& t) {
    validate_cubic_tree(t);
    std::vector<std::vector<int>> tree_adj(t.n);
    for (auto [a, b] : t.edges) {
        tree_adj[a].push_back(b);
        tree_adj[b].push_back(a);
    }
    for (auto& nbrs : tree_adj) std::sort(nbrs.begin(), nbrs.end());

    NamedGraph out;
    std::vector<std::pair<VertexId, VertexId>> edges;
    // attach[{p,q}] = vertex of p's gadget that faces tree neighbor q
    std::map<std::pair<int, int>, VertexId> attach;
    int next_id = 0;
    for (int v = 0; v < t.n; ++v) {
        if (tree_adj[v].size() == 3) {
            // inner vertex becomes a triangle; corners a,b,c face the sorted neighbors
            const char* corner[3] = {"a", "b", "c"};
            for (int s = 0; s < 3; ++s) {
                out.names.push_back(std::string(corner[s]) + "#" + std::to_string(v));
                attach[{v, tree_adj[v][s]}] = next_id + s;
            }
            edges.emplace_back(next_id, next_id + 1);
            edges.emplace_back(next_id, next_id + 2);
            edges.emplace_back(next_id + 1, next_id + 2);
            next_id += 3;
        } else {
            // leaf becomes a fresh H3 copy, the leaf identified with w
            for (int s = 0; s < 7; ++s)
                out.names.push_back(std::string(kH3Names[s]) + "#" + std::to_string(v));
            for (auto [a, b] : kH3Edges) edges.emplace_back(next_id + a, next_id + b);
            attach[{v, tree_adj[v][0]}] = next_id;  // w
            next_id += 7;
        }
    }
    for (auto [a, b] : t.edges) edges.emplace_back(attach.at({a, b}), attach.at({b, a}));
    out.graph = Graph::from_edges(next_id, edges);
    return out;
}

SporadicFixture gen_sporadic(Sporadic which) {
    SporadicFixture fx;
    switch (which) {
        case Sporadic::Petersen: {
            fx.named = gen_petersen(5, 2);
            fx.coloring = Coloring(4, {3, 4, 2, 1, 2, 2, 2, 3, 3, 4});
            fx.designated = {0, 3, 4, 9};
            break;
        }
        case Sporadic::Prism3: {
            fx.named = gen_petersen(3, 1);
            fx.coloring = Coloring(3, {1, 2, 3, 3, 1, 2});
            fx.designated = {0, 1, 2};
            break;
        }
        case Sporadic::K33: {
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (int a = 0; a < 3; ++a)
                for (int b = 3; b < 6; ++b) edges.emplace_back(a, b);
            fx.named.graph = Graph::from_edges(6, edges);
            fx.named.names = {"a0", "a1", "a2", "b0", "b1", "b2"};
            fx.coloring = Coloring(4, {1, 2, 3, 4, 4, 4});
            fx.designated = {0, 1, 2, 3};
            break;
        }
        case Sporadic::G1: {
            std::vector<std::pair<VertexId, VertexId>> edges = {
                {0, 1}, {1, 3}, {3, 5}, {5, 7}, {7, 9}, {9, 3}, {9, 8}, {8, 6},
                {6, 4}, {4, 2}, {2, 0}, {0, 6}, {5, 4}, {2, 8}, {1, 7},
            };
            fx.named.graph = Graph::from_edges(10, edges);
            fx.named.names = {"g", "h", "i", "j", "k", "l", "m", "n", "o", "p"};
            fx.coloring = Coloring(4, {1, 4, 2, 2, 3, 1, 2, 2, 4, 3});
            fx.designated = {0, 2, 4, 8};
            break;
        }
    }
    return fx;
}

}  // namespace abchrome
