#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abchrome/graph.hpp"

namespace abchrome {

class ColoringError : public std::runtime_error {
public:
    enum class Kind {
        SizeMismatch,
        ColorOutOfRange,
        ImproperInput,
        CyclicInput,
        NonCubicGraph,
    };

    ColoringError(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

// Total map vertex -> color in 1..k; k >= max color used.
struct Coloring {
    int k = 0;
    std::vector<int> colors;

    Coloring() = default;
    Coloring(int k_, std::vector<int> colors_) : k(k_), colors(std::move(colors_)) {}

    int color(VertexId v) const { return colors[v]; }
    int size() const { return static_cast<int>(colors.size()); }
};

void validate_coloring(const Graph& g, const Coloring& c);

int colors_used(const Coloring& c);
std::vector<int> used_colors(const Coloring& c);

// Proper <=> no monochromatic edge; returns one offending edge otherwise.
std::optional<std::pair<VertexId, VertexId>> find_improper_edge(const Graph& g, const Coloring& c);
bool is_proper(const Graph& g, const Coloring& c);

struct BicoloredCycle {
    int color_a = 0;
    int color_b = 0;
    CycleWitness cycle;
};

// Acyclic <=> every two color classes induce a forest. Input must be proper.
// Returns the first failing color pair (ascending) with a concrete cycle.
std::optional<BicoloredCycle> find_bicolored_cycle(const Graph& g, const Coloring& c);
bool is_acyclic(const Graph& g, const Coloring& c);

// Colors of 1..k absent from the closed neighborhood N[v].
std::vector<int> missing_colors(const Graph& g, const Coloring& c, VertexId v);

// Vertices of color i whose closed neighborhood contains all k colors.
std::vector<VertexId> b_vertices(const Graph& g, const Coloring& c, int color_i);

// Per-vertex replacement colors for one whole color class.
struct RecolorWitness {
    int class_color = 0;
    std::vector<std::pair<VertexId, int>> replacement;  // sorted by vertex id
};

enum class RefusalKind {
    EmptyClass,
    BVertexPresent,
    AllAssignmentsCyclic,
};

struct RecolorRefusal {
    RefusalKind kind;
    std::optional<VertexId> vertex;  // offending vertex for the latter two kinds
};

struct RecolorOutcome {
    std::optional<RecolorWitness> witness;
    std::optional<RecolorRefusal> refusal;

    bool stepped() const { return witness.has_value(); }
};

// Exact search for an acyclic recoloring step removing color class i.
// Input coloring must be acyclic.
RecolorOutcome try_acyclic_recoloring_step(const Graph& g, const Coloring& c, int class_color);

Coloring apply_recoloring(const Coloring& c, const RecolorWitness& w);

struct MinimalityResult {
    bool minimal = false;
    std::optional<int> color;              // first color admitting a step
    std::optional<RecolorWitness> witness;
};

// True iff no acyclic recoloring step is possible for any color class in use.
MinimalityResult is_ab_minimal(const Graph& g, const Coloring& c);

struct BlockEntry {
    int candidate;                      // a color missing in N[v]
    std::optional<CycleWitness> cycle;  // shortest blocking cycle; empty = "free"

    bool free() const { return !cycle.has_value(); }
};

struct BlockReport {
    VertexId vertex;
    std::vector<BlockEntry> entries;  // ascending candidate color

    bool fully_blocked() const;
};

// For each candidate color j missing at v: the shortest cycle through v whose
// other vertices use colors {j, m} for a single m (a j_v-cycle), or "free".
BlockReport blocking_report(const Graph& g, const Coloring& c, VertexId v);

enum class AbShape { BVertex, TypeA, TypeB, None };

// Neighborhood shape of v in a cubic graph: b-vertex, type A (monochromatic
// neighbors), type B (exactly two neighbor colors), or none.
AbShape classify_ab_vertex_shape(const Graph& g, const Coloring& c, VertexId v);

// Sum over color pairs {i,j} of the cycle space dimension of G[V_i,j].
int bicolored_cycle_space_dimension(const Graph& g, const Coloring& c);

// Order-preserving renumbering of the used colors to 1..used, with k = used.
Coloring compress_palette(const Coloring& c);

namespace detail {

// Step search without input validation; backbone of try_acyclic_recoloring_step
// and the solver's leaf checks.
RecolorOutcome step_search_unchecked(const Graph& g, const Coloring& c, int class_color);
MinimalityResult is_ab_minimal_unchecked(const Graph& g, const Coloring& c);

}  // namespace detail

}  // namespace abchrome
