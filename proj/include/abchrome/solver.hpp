#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abchrome/coloring.hpp"
#include "abchrome/graph.hpp"

namespace abchrome {

struct SearchBudget {
    long long max_nodes = 1LL << 62;
    long long max_millis = 1LL << 62;
    std::optional<std::uint64_t> seed;  // reserved for randomized restarts; exact mode ignores it

    bool valid() const { return max_nodes > 0 && max_millis > 0; }
};

// Result of one exact invariant computation. `value` is set only when the
// search proved it; otherwise [lower, upper] brackets the true value.
struct ValueResult {
    std::optional<int> value;
    int lower = 0;
    int upper = 0;
    std::optional<Coloring> witness;
    bool budget_exhausted = false;
    long long nodes = 0;
    long long millis = 0;

    bool exact() const { return value.has_value(); }
};

struct DecycleStats {
    int iterations = 0;
    std::vector<int> potential_trace;  // bi-colored cycle space dimension per step
};

// Constructive de-cycling of a proper <=4-coloring of a cubic graph: while a
// bi-colored cycle exists, apply one local recoloring rule; each iteration
// strictly decreases the bi-colored cycle space dimension.
Coloring decycle_4coloring(const Graph& g, const Coloring& c, DecycleStats* stats = nullptr);

// Acyclic chromatic number A(G): least k admitting an acyclic k-coloring.
ValueResult compute_A(const Graph& g, const SearchBudget& budget);

// b-chromatic number phi(G): greatest k admitting a proper k-coloring with a
// b-vertex in every class.
ValueResult compute_phi(const Graph& g, const SearchBudget& budget);

// Acyclic b-chromatic number A_b(G): greatest k admitting an acyclic
// k-coloring for which no acyclic recoloring step is possible.
ValueResult compute_Ab(const Graph& g, const SearchBudget& budget);

struct B4Result {
    enum class Status { Found, NoneExists, BudgetExhausted };
    Status status = Status::BudgetExhausted;
    std::optional<Coloring> witness;
    long long nodes = 0;
    long long millis = 0;
};

// Searches for an acyclic, recoloring-minimal 4-coloring of a cubic graph,
// seeded by de-cycling a greedy (or caller-provided) proper 4-coloring and
// falling back to exhaustive search.
B4Result find_acyclic_b4(const Graph& g, const SearchBudget& budget,
                         const std::optional<Coloring>& seed = std::nullopt);

struct ConjectureProbe {
    enum class Verdict { Vacuous, Supported, Violated, Inconclusive };
    std::optional<int> girth;  // empty = acyclic graph
    ValueResult phi;
    ValueResult ab;
    bool hypothesis = false;  // g(G) > 2*phi(G), with girth infinite counting as true
    Verdict verdict = Verdict::Inconclusive;
};

// Tests the hypothesis g(G) > 2 phi(G) and, when it holds, whether
// A_b(G) >= phi(G); only exact values can support or violate.
ConjectureProbe probe_conjecture(const Graph& g, const SearchBudget& budget);

ConjectureProbe assemble_conjecture(std::optional<int> girth_value, ValueResult phi,
                                    ValueResult ab);

// Greedy proper coloring (breadth-first order, smallest feasible color).
Coloring greedy_proper_coloring(const Graph& g);

// Applies acyclic recoloring steps from a starting coloring until none is
// possible, compressing unused colors along the way.
Coloring greedy_minimal_acyclic(const Graph& g);

namespace detail {

ValueResult compute_Ab_with_options(const Graph& g, const SearchBudget& budget,
                                    bool symmetry_breaking);

}  // namespace detail

}  // namespace abchrome
