#include "abchrome/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>

#include "abchrome/detail/cycle_probe.hpp"

namespace abchrome {

namespace {

using SteadyClock = std::chrono::steady_clock;

struct BudgetExceeded {};

struct BudgetClock {
    long long max_nodes;
    long long max_millis;
    SteadyClock::time_point start = SteadyClock::now();
    long long nodes = 0;

    explicit BudgetClock(const SearchBudget& b) : max_nodes(b.max_nodes), max_millis(b.max_millis) {
        if (!b.valid()) throw std::invalid_argument("search budget limits must be positive");
    }

    void tick() {
        if (++nodes > max_nodes) throw BudgetExceeded{};
        if ((nodes & 0xfff) == 0 && elapsed_millis() > max_millis) throw BudgetExceeded{};
    }

    long long elapsed_millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(SteadyClock::now() - start)
            .count();
    }
};

struct RollbackDsu {
    std::vector<int> parent;
    std::vector<int> rnk;
    struct Op {
        int child;
        int root;
        bool bumped;
    };
    std::vector<Op> ops;

    void init(int n) {
        parent.resize(n);
        rnk.assign(n, 0);
        for (int i = 0; i < n; ++i) parent[i] = i;
        ops.clear();
    }

    int find(int x) const {
        while (x != parent[x]) x = parent[x];
        return x;
    }

    // false when a and b are already connected (the union would close a cycle)
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (rnk[ra] < rnk[rb]) std::swap(ra, rb);
        bool bumped = rnk[ra] == rnk[rb];
        parent[rb] = ra;
        if (bumped) ++rnk[ra];
        ops.push_back({rb, ra, bumped});
        return true;
    }

    size_t mark() const { return ops.size(); }

    void rollback(size_t m) {
        while (ops.size() > m) {
            Op op = ops.back();
            ops.pop_back();
            parent[op.child] = op.child;
            if (op.bumped) --rnk[op.root];
        }
    }
};

// Breadth-first from vertex 0, expanding neighbors by descending degree then
// ascending id; later components from their smallest vertex.
std::vector<VertexId> search_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<VertexId> order;
    order.reserve(n);
    std::vector<char> seen(n, 0);
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        std::deque<VertexId> queue{s};
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            order.push_back(u);
            std::vector<VertexId> nbrs = g.neighbors(u);
            std::sort(nbrs.begin(), nbrs.end(), [&](VertexId a, VertexId b) {
                if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
                return a < b;
            });
            for (VertexId w : nbrs)
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    return order;
}

enum class LeafMode { AnyAcyclic, MinimalAcyclic, BVerticesAllClasses };

struct LevelResult {
    enum class Status { Found, Exhausted, Budget };
    Status status = Status::Exhausted;
    std::optional<Coloring> witness;
};

struct Engine {
    const Graph& g;
    int k;
    LeafMode mode;
    bool exact_count;
    bool symmetry_break;
    bool acyclic_pruning;
    BudgetClock& clock;

    int n = 0;
    std::vector<VertexId> order;
    std::vector<int> col;          // by vertex id, 0 = unassigned
    std::vector<int> class_size;   // occupancy per color
    int distinct_used = 0;
    std::vector<RollbackDsu> pair_dsu;  // indexed pair_index(a,b), a < b
    std::vector<std::vector<std::pair<int, size_t>>> touched;  // per depth: (pair, mark)
    std::optional<Coloring> found;

    int pair_index(int a, int b) const { return (a - 1) * (k + 1) + b; }

    void init() {
        n = g.vertex_count();
        order = search_order(g);
        col.assign(n, 0);
        class_size.assign(k + 1, 0);
        if (acyclic_pruning) {
            pair_dsu.resize((k + 1) * (k + 1));
            for (int a = 1; a <= k; ++a)
                for (int b = a + 1; b <= k; ++b) pair_dsu[pair_index(a, b)].init(n);
            touched.assign(n, {});
        }
    }

    bool leaf_ok() {
        if (exact_count && distinct_used != k) return false;
        if (mode == LeafMode::AnyAcyclic) return true;
        Coloring leaf(k, col);
        Coloring compact = compress_palette(leaf);
        if (mode == LeafMode::MinimalAcyclic)
            return detail::is_ab_minimal_unchecked(g, compact).minimal;
        // BVerticesAllClasses
        std::vector<char> class_has_b(compact.k + 1, 0);
        for (VertexId v = 0; v < n; ++v) {
            std::vector<char> present(compact.k + 1, 0);
            present[compact.colors[v]] = 1;
            int count = 1;
            for (VertexId w : g.neighbors(v))
                if (!present[compact.colors[w]]) {
                    present[compact.colors[w]] = 1;
                    ++count;
                }
            if (count == compact.k) class_has_b[compact.colors[v]] = 1;
        }
        for (int a = 1; a <= compact.k; ++a)
            if (!class_has_b[a]) return false;
        return true;
    }

    bool dfs(size_t depth) {
        if (depth == order.size()) {
            if (!leaf_ok()) return false;
            found = compress_palette(Coloring(k, col));
            return true;
        }
        if (exact_count &&
            distinct_used + static_cast<int>(order.size() - depth) < k)
            return false;
        const VertexId v = order[depth];
        const int limit = symmetry_break ? std::min(k, distinct_used + 1) : k;
        for (int color = 1; color <= limit; ++color) {
            bool proper = true;
            for (VertexId u : g.neighbors(v))
                if (col[u] == color) {
                    proper = false;
                    break;
                }
            if (!proper) continue;
            clock.tick();
            bool acyclic = true;
            if (acyclic_pruning) {
                // lazily recorded rollback marks for the pairs this vertex touches
                auto& marks = touched[depth];
                marks.clear();
                for (VertexId u : g.neighbors(v)) {
                    if (col[u] == 0) continue;
                    const int p = pair_index(std::min(color, col[u]), std::max(color, col[u]));
                    bool recorded = false;
                    for (const auto& [q, _] : marks) recorded = recorded || q == p;
                    if (!recorded) marks.emplace_back(p, pair_dsu[p].mark());
                    if (!pair_dsu[p].unite(v, u)) {
                        acyclic = false;
                        break;
                    }
                }
            }
            if (acyclic) {
                col[v] = color;
                ++class_size[color];
                if (class_size[color] == 1) ++distinct_used;
                if (dfs(depth + 1)) return true;
                --class_size[color];
                if (class_size[color] == 0) --distinct_used;
                col[v] = 0;
            }
            if (acyclic_pruning) {
                auto& marks = touched[depth];
                for (auto it = marks.rbegin(); it != marks.rend(); ++it)
                    pair_dsu[it->first].rollback(it->second);
            }
        }
        return false;
    }

    LevelResult run() {
        init();
        LevelResult res;
        try {
            if (dfs(0)) {
                res.status = LevelResult::Status::Found;
                res.witness = std::move(found);
            } else {
                res.status = LevelResult::Status::Exhausted;
            }
        } catch (const BudgetExceeded&) {
            res.status = LevelResult::Status::Budget;
        }
        return res;
    }
};

LevelResult run_level(const Graph& g, int k, LeafMode mode, bool exact_count, bool symmetry_break,
                      bool acyclic_pruning, BudgetClock& clock) {
    Engine engine{g, k, mode, exact_count, symmetry_break, acyclic_pruning, clock, {}, {}, {}, {}, 0, {}, {}, {}};
    return engine.run();
}

int ab_upper_bound(const Graph& g) {
    // the quadratic bound governs for max degree >= 2; below that every class
    // of a minimal coloring needs a plain b-vertex, capping at d + 1
    const int d = g.max_degree();
    return std::min(g.vertex_count(), std::max(d + 1, d * d / 2 + 1));
}

// Plain (not acyclic) recoloring steps from the trivial coloring until every
// class keeps a b-vertex; yields a phi lower-bound witness.
Coloring greedy_b_minimal(const Graph& g) {
    const int n = g.vertex_count();
    Coloring c(n, std::vector<int>(n));
    for (int v = 0; v < n; ++v) c.colors[v] = v + 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int color : used_colors(c)) {
            std::vector<std::pair<VertexId, int>> plan;
            bool blocked = false;
            for (VertexId v = 0; v < n; ++v) {
                if (c.colors[v] != color) continue;
                auto miss = missing_colors(g, c, v);
                if (miss.empty()) {
                    blocked = true;
                    break;
                }
                plan.emplace_back(v, miss.front());
            }
            if (blocked || plan.empty()) continue;
            for (auto [v, repl] : plan) c.colors[v] = repl;
            c = compress_palette(c);
            changed = true;
            break;
        }
    }
    return compress_palette(c);
}

struct FoundBicoloredCycle {
    int color_a = 0;
    int color_b = 0;
    std::vector<VertexId> seq;
};

// Globally shortest bi-colored cycle; tie-break by smallest anchoring vertex
// id, then ascending color pair, then lexicographic sequence.
std::optional<FoundBicoloredCycle> pick_bicolored_cycle(const Graph& g, const Coloring& c) {
    const int n = g.vertex_count();
    const auto used = used_colors(c);
    int best_len = detail::kCycleInf;
    int best_root = -1, best_a = 0, best_b = 0;
    for (size_t ai = 0; ai < used.size(); ++ai) {
        for (size_t bi = ai + 1; bi < used.size(); ++bi) {
            const int a = used[ai], b = used[bi];
            auto include = [&](VertexId x) { return c.colors[x] == a || c.colors[x] == b; };
            for (VertexId root = 0; root < n; ++root) {
                if (!include(root)) continue;
                int len = detail::shortest_cycle_through_vertex(g, root, include);
                if (len < best_len || (len == best_len && root < best_root)) {
                    best_len = len;
                    best_root = root;
                    best_a = a;
                    best_b = b;
                }
            }
        }
    }
    if (best_len == detail::kCycleInf) return std::nullopt;
    auto include = [&](VertexId x) { return c.colors[x] == best_a || c.colors[x] == best_b; };
    FoundBicoloredCycle out;
    out.color_a = best_a;
    out.color_b = best_b;
    out.seq = detail::lex_min_cycle_through_vertex(g, best_root, best_len, include);
    if (out.seq.empty())
        throw std::logic_error("internal defect: shortest bi-colored cycle not reconstructible");
    return out;
}

}  // namespace

Coloring greedy_proper_coloring(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> col(n, 0);
    int max_used = 0;
    for (VertexId v : search_order(g)) {
        int color = 1;
        for (bool taken = true; taken; ++color) {
            taken = false;
            for (VertexId u : g.neighbors(v))
                if (col[u] == color) {
                    taken = true;
                    break;
                }
            if (!taken) {
                col[v] = color;
                max_used = std::max(max_used, color);
                break;
            }
        }
    }
    return Coloring(max_used, col);
}

Coloring greedy_minimal_acyclic(const Graph& g) {
    const int n = g.vertex_count();
    Coloring c(n, std::vector<int>(n));
    for (int v = 0; v < n; ++v) c.colors[v] = v + 1;
    if (is_cubic(g)) c = compress_palette(decycle_4coloring(g, greedy_proper_coloring(g)));
    while (true) {
        c = compress_palette(c);
        MinimalityResult res = detail::is_ab_minimal_unchecked(g, c);
        if (res.minimal) return c;
        c = apply_recoloring(c, *res.witness);
    }
}

Coloring decycle_4coloring(const Graph& g, const Coloring& c, DecycleStats* stats) {
    if (!is_cubic(g))
        throw ColoringError(ColoringError::Kind::NonCubicGraph,
                            "de-cycling rules apply to cubic graphs only");
    validate_coloring(g, c);
    if (c.k > 4) {
        // accept a wider declared palette only when the used colors fit in [4]
        for (int col : c.colors)
            if (col > 4)
                throw ColoringError(ColoringError::Kind::ColorOutOfRange,
                                    "de-cycling requires at most 4 colors");
    }
    if (auto bad = find_improper_edge(g, c))
        throw ColoringError(ColoringError::Kind::ImproperInput,
                            "input coloring is not proper at edge (" + std::to_string(bad->first) +
                                "," + std::to_string(bad->second) + ")");

    Coloring work(4, c.colors);
    int potential = bicolored_cycle_space_dimension(g, work);
    if (stats) {
        stats->iterations = 0;
        stats->potential_trace = {potential};
    }
    if (potential == 0) return c;  // already acyclic: unchanged

    const int guard = potential + 1;
    for (int iter = 0; iter < guard; ++iter) {
        auto cyc = pick_bicolored_cycle(g, work);
        if (!cyc) break;
        const auto& seq = cyc->seq;
        const int len = static_cast<int>(seq.size());
        auto at = [&](int i) { return seq[((i % len) + len) % len]; };
        auto off_neighbor = [&](int i) {
            VertexId vi = at(i), prev = at(i - 1), next = at(i + 1);
            for (VertexId w : g.neighbors(vi))
                if (w != prev && w != next) return w;
            throw std::logic_error("internal defect: cubic vertex lacks an off-cycle neighbor");
        };
        const int ca = cyc->color_a, cb = cyc->color_b;
        std::vector<int> offs;
        for (int color = 1; color <= 4; ++color)
            if (color != ca && color != cb) offs.push_back(color);

        int pivot = -1;
        for (int i = 0; i < len && pivot < 0; ++i) {
            int cu = work.colors[off_neighbor(i)];
            if (cu == ca || cu == cb) pivot = i;
        }
        if (pivot >= 0) {
            const int cu_prev = work.colors[off_neighbor(pivot - 1)];
            const int cu_next = work.colors[off_neighbor(pivot + 1)];
            const bool both_offs =
                cu_prev != cu_next &&
                (cu_prev == offs[0] || cu_prev == offs[1]) &&
                (cu_next == offs[0] || cu_next == offs[1]);
            if (both_offs) {
                work.colors[at(pivot - 1)] = cu_next;
            } else {
                int b = 0;
                for (int cand : offs)
                    if (cand != cu_prev && cand != cu_next) {
                        b = cand;
                        break;
                    }
                work.colors[at(pivot)] = b;
            }
        } else {
            // every off-cycle neighbor avoids the cycle colors
            const int gamma = work.colors[off_neighbor(1)];
            const int delta = gamma == offs[0] ? offs[1] : offs[0];
            if (work.colors[off_neighbor(0)] == delta && work.colors[off_neighbor(2)] == delta) {
                const int alpha = work.colors[at(0)];
                work.colors[at(0)] = gamma;
                work.colors[at(2)] = gamma;
                work.colors[at(1)] = alpha;
            } else {
                work.colors[at(1)] = delta;
            }
        }

        int next_potential = bicolored_cycle_space_dimension(g, work);
        if (next_potential >= potential)
            throw std::logic_error("internal defect: de-cycling step did not reduce the potential");
        potential = next_potential;
        if (stats) {
            ++stats->iterations;
            stats->potential_trace.push_back(potential);
        }
        if (potential == 0) break;
    }
    if (auto leftover = find_bicolored_cycle(g, work))
        throw std::logic_error("internal defect: de-cycling terminated with a bi-colored cycle");
    return work;
}

namespace detail {

ValueResult compute_Ab_with_options(const Graph& g, const SearchBudget& budget,
                                    bool symmetry_breaking) {
    BudgetClock clock(budget);
    ValueResult out;
    const int ub = ab_upper_bound(g);
    out.lower = 1;
    out.upper = ub;
    for (int k = ub; k >= 1; --k) {
        LevelResult res = run_level(g, k, LeafMode::MinimalAcyclic, /*exact_count=*/true,
                                    symmetry_breaking, /*acyclic_pruning=*/true, clock);
        if (res.status == LevelResult::Status::Found) {
            Coloring witness = std::move(*res.witness);
            if (!is_acyclic(g, witness) || !is_ab_minimal(g, witness).minimal)
                throw std::logic_error("internal defect: A_b witness failed re-verification");
            out.value = k;
            out.lower = out.upper = k;
            out.witness = std::move(witness);
            break;
        }
        if (res.status == LevelResult::Status::Budget) {
            out.budget_exhausted = true;
            out.upper = k;
            Coloring fallback = greedy_minimal_acyclic(g);
            out.lower = colors_used(fallback);
            out.witness = std::move(fallback);
            break;
        }
        out.upper = k - 1;
    }
    if (!out.exact() && !out.budget_exhausted)
        throw std::logic_error("internal defect: no recoloring-minimal acyclic coloring found "
                               "below the upper bound");
    out.nodes = clock.nodes;
    out.millis = clock.elapsed_millis();
    return out;
}

}  // namespace detail

ValueResult compute_Ab(const Graph& g, const SearchBudget& budget) {
    return detail::compute_Ab_with_options(g, budget, /*symmetry_breaking=*/true);
}

ValueResult compute_A(const Graph& g, const SearchBudget& budget) {
    BudgetClock clock(budget);
    ValueResult out;
    const int n = g.vertex_count();
    out.lower = 1;
    out.upper = n;
    for (int k = 1; k <= n; ++k) {
        LevelResult res = run_level(g, k, LeafMode::AnyAcyclic, /*exact_count=*/false,
                                    /*symmetry_break=*/true, /*acyclic_pruning=*/true, clock);
        if (res.status == LevelResult::Status::Found) {
            Coloring witness = std::move(*res.witness);
            if (!is_acyclic(g, witness))
                throw std::logic_error("internal defect: A witness failed re-verification");
            out.value = k;
            out.lower = out.upper = k;
            out.witness = std::move(witness);
            break;
        }
        if (res.status == LevelResult::Status::Budget) {
            out.budget_exhausted = true;
            out.lower = k;
            if (is_cubic(g)) {
                Coloring fallback = compress_palette(decycle_4coloring(g, greedy_proper_coloring(g)));
                out.upper = colors_used(fallback);
                out.witness = std::move(fallback);
            }
            break;
        }
        out.lower = k + 1;
    }
    out.nodes = clock.nodes;
    out.millis = clock.elapsed_millis();
    return out;
}

ValueResult compute_phi(const Graph& g, const SearchBudget& budget) {
    BudgetClock clock(budget);
    ValueResult out;
    const int ub = std::min(g.vertex_count(), g.max_degree() + 1);
    out.lower = 1;
    out.upper = ub;
    for (int k = ub; k >= 1; --k) {
        LevelResult res = run_level(g, k, LeafMode::BVerticesAllClasses, /*exact_count=*/true,
                                    /*symmetry_break=*/true, /*acyclic_pruning=*/false, clock);
        if (res.status == LevelResult::Status::Found) {
            out.value = k;
            out.lower = out.upper = k;
            out.witness = std::move(res.witness);
            break;
        }
        if (res.status == LevelResult::Status::Budget) {
            out.budget_exhausted = true;
            out.upper = k;
            Coloring fallback = greedy_b_minimal(g);
            out.lower = colors_used(fallback);
            out.witness = std::move(fallback);
            break;
        }
        out.upper = k - 1;
    }
    out.nodes = clock.nodes;
    out.millis = clock.elapsed_millis();
    return out;
}

B4Result find_acyclic_b4(const Graph& g, const SearchBudget& budget,
                         const std::optional<Coloring>& seed) {
    if (!is_cubic(g))
        throw ColoringError(ColoringError::Kind::NonCubicGraph,
                            "find_acyclic_b4 requires a cubic graph");
    BudgetClock clock(budget);
    B4Result out;

    std::vector<Coloring> seeds;
    if (seed) seeds.push_back(*seed);
    seeds.push_back(greedy_proper_coloring(g));
    for (const Coloring& s : seeds) {
        if (s.size() != g.vertex_count()) continue;
        bool fits = true;
        for (int col : s.colors) fits = fits && col >= 1 && col <= 4;
        if (!fits || find_improper_edge(g, Coloring(4, s.colors))) continue;
        Coloring repaired = decycle_4coloring(g, Coloring(4, s.colors));
        repaired = compress_palette(repaired);
        if (colors_used(repaired) == 4 && detail::is_ab_minimal_unchecked(g, repaired).minimal) {
            out.status = B4Result::Status::Found;
            out.witness = std::move(repaired);
            out.nodes = clock.nodes;
            out.millis = clock.elapsed_millis();
            return out;
        }
    }

    LevelResult res = run_level(g, 4, LeafMode::MinimalAcyclic, /*exact_count=*/true,
                                /*symmetry_break=*/true, /*acyclic_pruning=*/true, clock);
    switch (res.status) {
        case LevelResult::Status::Found:
            out.status = B4Result::Status::Found;
            out.witness = std::move(res.witness);
            break;
        case LevelResult::Status::Exhausted:
            out.status = B4Result::Status::NoneExists;
            break;
        case LevelResult::Status::Budget:
            out.status = B4Result::Status::BudgetExhausted;
            break;
    }
    out.nodes = clock.nodes;
    out.millis = clock.elapsed_millis();
    return out;
}

ConjectureProbe assemble_conjecture(std::optional<int> girth_value, ValueResult phi,
                                    ValueResult ab) {
    ConjectureProbe probe;
    probe.girth = girth_value;
    probe.phi = std::move(phi);
    probe.ab = std::move(ab);
    if (!probe.phi.exact() || !probe.ab.exact()) {
        probe.verdict = ConjectureProbe::Verdict::Inconclusive;
        return probe;
    }
    probe.hypothesis = !probe.girth.has_value() || *probe.girth > 2 * *probe.phi.value;
    if (!probe.hypothesis) {
        probe.verdict = ConjectureProbe::Verdict::Vacuous;
    } else if (*probe.ab.value >= *probe.phi.value) {
        probe.verdict = ConjectureProbe::Verdict::Supported;
    } else {
        probe.verdict = ConjectureProbe::Verdict::Violated;
    }
    return probe;
}

ConjectureProbe probe_conjecture(const Graph& g, const SearchBudget& budget) {
    return assemble_conjecture(girth(g), compute_phi(g, budget), compute_Ab(g, budget));
}

}  // namespace abchrome
