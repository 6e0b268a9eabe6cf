#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace abchrome {

using VertexId = int;

// Cyclic vertex sequence: consecutive entries (wrapping) are adjacent in the
// owning graph, all entries distinct, length >= 3.
struct CycleWitness {
    std::vector<VertexId> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
};

class GraphError : public std::runtime_error {
public:
    enum class Kind {
        LoopEdge,
        DuplicateEdge,
        EndpointOutOfRange,
        InvalidOrder,
        BadCharacter,
        TruncatedPayload,
        NonzeroPadding,
        TrailingData,
        ExtendedSizeUnsupported,
        UnsupportedOrder,
        EmptyInput,
    };

    GraphError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Simple undirected graph over dense vertex ids 0..n-1.
// Immutable after construction; adjacency lists are strictly increasing.
class Graph {
public:
    Graph() : n_(1), m_(0), adj_(1) {}

    static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(VertexId u, VertexId v) const;

    // All edges as pairs (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    int max_degree() const;

private:
    int n_;
    int m_;
    std::vector<std::vector<VertexId>> adj_;
};

bool is_cubic(const Graph& g);

// Length of a shortest cycle; empty optional marks an acyclic graph (forest).
std::optional<int> girth(const Graph& g);

struct ForestCheck {
    std::optional<CycleWitness> cycle;

    bool is_forest() const { return !cycle.has_value(); }
};

// One-shot check on the subgraph induced by `keep` (treated as a set);
// returns a concrete cycle lying inside `keep` when one exists.
ForestCheck induced_subgraph_is_forest(const Graph& g, const std::vector<VertexId>& keep);

// graph6 codec, n <= 62 (single size byte). Strict: canonical minimal-length
// size encoding, zero padding bits, no extended 4/8-byte size forms.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

}  // namespace abchrome
