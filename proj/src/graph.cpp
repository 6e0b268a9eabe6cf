#include "abchrome/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace abchrome {

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (n < 1)
        throw GraphError(GraphError::Kind::InvalidOrder,
                         "graph order must be at least 1, got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.m_ = 0;
    g.adj_.assign(n, {});
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& [a, b] : edges) {
        const std::string pair_text = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw GraphError(GraphError::Kind::EndpointOutOfRange,
                             "edge endpoint out of range: " + pair_text);
        if (a == b)
            throw GraphError(GraphError::Kind::LoopEdge, "loop edge rejected: " + pair_text);
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            throw GraphError(GraphError::Kind::DuplicateEdge, "duplicate edge rejected: " + pair_text);
    }
    for (const auto& [a, b] : seen) {
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
        ++g.m_;
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(m_);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool is_cubic(const Graph& g) {
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 3) return false;
    return true;
}

std::optional<int> girth(const Graph& g) {
    const int n = g.vertex_count();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (VertexId root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<VertexId> queue{root};
        dist[root] = 0;
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            if (best != -1 && 2 * dist[u] >= best) continue;
            for (VertexId w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

ForestCheck induced_subgraph_is_forest(const Graph& g, const std::vector<VertexId>& keep) {
    const int n = g.vertex_count();
    std::vector<char> in(n, 0);
    for (VertexId v : keep) {
        if (v < 0 || v >= n)
            throw GraphError(GraphError::Kind::EndpointOutOfRange,
                             "keep vertex out of range: " + std::to_string(v));
        in[v] = 1;
    }
    std::vector<int> state(n, 0);  // 0 unseen, 1 on stack, 2 done
    std::vector<VertexId> parent(n, -1);
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < n; ++start) {
        if (!in[start] || state[start] != 0) continue;
        stack.push_back(start);
        state[start] = 1;
        // iterative DFS keeping the current path for witness extraction
        std::vector<std::pair<VertexId, size_t>> frames{{start, 0}};
        while (!frames.empty()) {
            auto& [u, idx] = frames.back();
            const auto& nbrs = g.neighbors(u);
            bool descended = false;
            while (idx < nbrs.size()) {
                VertexId w = nbrs[idx++];
                if (!in[w] || w == parent[u]) continue;
                if (state[w] == 1) {
                    // back edge: path from w to u along the DFS stack
                    CycleWitness cyc;
                    auto it = std::find(stack.begin(), stack.end(), w);
                    for (; it != stack.end(); ++it) cyc.vertices.push_back(*it);
                    return ForestCheck{std::move(cyc)};
                }
                if (state[w] == 0) {
                    parent[w] = u;
                    state[w] = 1;
                    stack.push_back(w);
                    frames.emplace_back(w, 0);
                    descended = true;
                    break;
                }
            }
            if (descended) continue;
            state[u] = 2;
            stack.pop_back();
            frames.pop_back();
        }
    }
    return ForestCheck{std::nullopt};
}

namespace {

constexpr int kG6Offset = 63;
constexpr int kG6MaxSmallOrder = 62;

}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty())
        throw GraphError(GraphError::Kind::EmptyInput, "empty graph6 input");
    for (char ch : text)
        if (ch < 63 || ch > 126)
            throw GraphError(GraphError::Kind::BadCharacter,
                             "invalid graph6 byte " + std::to_string(int(ch)));
    if (text[0] == 126)
        throw GraphError(GraphError::Kind::ExtendedSizeUnsupported,
                         "extended graph6 size encoding not supported (n > 62)");
    const int n = text[0] - kG6Offset;
    if (n < 1)
        throw GraphError(GraphError::Kind::InvalidOrder, "graph6 order must be at least 1");
    const long bits = static_cast<long>(n) * (n - 1) / 2;
    const long need = (bits + 5) / 6;
    const long have = static_cast<long>(text.size()) - 1;
    if (have < need)
        throw GraphError(GraphError::Kind::TruncatedPayload,
                         "graph6 payload too short: need " + std::to_string(need) + " bytes, got " +
                             std::to_string(have));
    if (have > need)
        throw GraphError(GraphError::Kind::TrailingData,
                         "graph6 payload too long: need " + std::to_string(need) + " bytes, got " +
                             std::to_string(have));
    std::vector<std::pair<VertexId, VertexId>> edges;
    long bit = 0;
    for (VertexId col = 1; col < n; ++col) {
        for (VertexId row = 0; row < col; ++row, ++bit) {
            int byte = text[1 + bit / 6] - kG6Offset;
            if (byte & (0x20 >> (bit % 6))) edges.emplace_back(row, col);
        }
    }
    // trailing pad bits must be zero in strict mode
    for (long p = bits; p < need * 6; ++p) {
        int byte = text[1 + p / 6] - kG6Offset;
        if (byte & (0x20 >> (p % 6)))
            throw GraphError(GraphError::Kind::NonzeroPadding, "nonzero graph6 padding bits");
    }
    return Graph::from_edges(n, edges);
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kG6MaxSmallOrder)
        throw GraphError(GraphError::Kind::UnsupportedOrder,
                         "graph6 emit supports n <= 62, got " + std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + kG6Offset));
    const long bits = static_cast<long>(n) * (n - 1) / 2;
    const long bytes = (bits + 5) / 6;
    std::string payload(bytes, static_cast<char>(kG6Offset));
    long bit = 0;
    for (VertexId col = 1; col < n; ++col) {
        for (VertexId row = 0; row < col; ++row, ++bit) {
            if (g.adjacent(row, col)) payload[bit / 6] += (0x20 >> (bit % 6));
        }
    }
    out += payload;
    return out;
}

}  // namespace abchrome
