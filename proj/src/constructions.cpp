#include "abchrome/constructions.hpp"

#include <algorithm>
#include <map>

#include "abchrome/detail/cycle_probe.hpp"
#include "abchrome/solver.hpp"

namespace abchrome {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

SegmentPalette next_palette(const SegmentPalette& p) {
    // carries the overlap identities c_i^2 = c_{i+1}^3 and c_i^3 = c_{i+1}^1;
    // a 5-cycle on positions, so five applications close up
    return SegmentPalette{{p[1], p[3], p[4], p[2], p[0]}};
}

SegmentPalette alt_palette(const SegmentPalette& p) {
    // the modified gluing used at i = 2 when n = 10k - 4
    return SegmentPalette{{p[1], p[3], p[0], p[2], p[4]}};
}

SegmentPalette prism_next_palette(const SegmentPalette& p) {
    // carries c_k^3 = c_{k+1}^4; also a 5-cycle on positions
    return SegmentPalette{{p[1], p[2], p[4], p[0], p[3]}};
}

struct FixedCell {
    VertexId v;
    int color;
};

// Accumulates pattern cells; overlapping segments must agree.
class FixedMap {
public:
    explicit FixedMap(int n) : colors_(n, 0) {}

    void set(VertexId v, int color) {
        if (colors_[v] != 0 && colors_[v] != color)
            throw ConstructionError(ConstructionError::Kind::VerificationFailed,
                                    "segment patterns disagree at vertex " + std::to_string(v) +
                                        ": " + std::to_string(colors_[v]) + " vs " +
                                        std::to_string(color));
        colors_[v] = color;
    }

    bool fixed(VertexId v) const { return colors_[v] != 0; }
    int color(VertexId v) const { return colors_[v]; }
    const std::vector<int>& raw() const { return colors_; }

private:
    std::vector<int> colors_;
};

// Fixed cells must already be proper and pairwise-forest among themselves.
bool fixed_cells_consistent(const Graph& g, const FixedMap& fixed, int k) {
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        if (!fixed.fixed(u)) continue;
        for (VertexId w : g.neighbors(u))
            if (u < w && fixed.fixed(w) && fixed.color(u) == fixed.color(w)) return false;
    }
    for (int a = 1; a <= k; ++a) {
        for (int b = a + 1; b <= k; ++b) {
            std::vector<VertexId> keep;
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (fixed.fixed(v) && (fixed.color(v) == a || fixed.color(v) == b))
                    keep.push_back(v);
            if (!induced_subgraph_is_forest(g, keep).is_forest()) return false;
        }
    }
    return true;
}

std::vector<VertexId> bfs_order_of_free(const Graph& g, const FixedMap& fixed) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<VertexId> order;
    std::deque<VertexId> queue;
    for (VertexId s = 0; s < n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        queue.push_back(s);
        while (!queue.empty()) {
            VertexId u = queue.front();
            queue.pop_front();
            if (!fixed.fixed(u)) order.push_back(u);
            for (VertexId w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    queue.push_back(w);
                }
        }
    }
    return order;
}

struct FillOutcome {
    std::optional<Coloring> coloring;
    bool backtracked = false;
};

// Greedy-first completion of the free vertices: smallest color keeping the
// partial coloring proper and free of bi-colored cycles, with backtracking
// gated on the final minimality verification.
FillOutcome fill_and_verify(const Graph& g, const FixedMap& fixed, int k, bool require_minimal) {
    FillOutcome out;
    if (!fixed_cells_consistent(g, fixed, k)) return out;
    std::vector<int> col(fixed.raw());
    const std::vector<VertexId> free_order = bfs_order_of_free(g, fixed);

    auto dfs = [&](auto&& self, size_t idx) -> bool {
        if (idx == free_order.size()) {
            Coloring leaf(k, col);
            if (require_minimal && !detail::is_ab_minimal_unchecked(g, leaf).minimal) {
                out.backtracked = true;
                return false;
            }
            out.coloring = std::move(leaf);
            return true;
        }
        const VertexId v = free_order[idx];
        for (int color = 1; color <= k; ++color) {
            bool ok = true;
            for (VertexId u : g.neighbors(v))
                if (col[u] == color) {
                    ok = false;
                    break;
                }
            for (int m = 1; m <= k && ok; ++m) {
                if (m == color) continue;
                ok = !detail::cycle_through_vertex_exists(g, v, [&](VertexId x) {
                    return col[x] == color || col[x] == m;
                });
            }
            if (!ok) continue;
            col[v] = color;
            if (self(self, idx + 1)) return true;
            col[v] = 0;
            out.backtracked = true;
        }
        return false;
    };
    dfs(dfs, 0);
    return out;
}

// Pattern cell relative to a segment anchor: ring 0 = outer/upper, 1 = inner/lower.
struct PatternCell {
    int ring;
    int offset;
    int palette_pos;
};

std::vector<PatternCell> gp5_pattern(int k) {
    std::vector<PatternCell> cells;
    cells.push_back({0, 0, 0});
    cells.push_back({0, 1, 4});
    if (k % 2 == 1) {
        for (int i = 1; i <= k; i += 2) cells.push_back({0, -i, 3});
        for (int i = 2; i <= k - 1; i += 2) cells.push_back({0, -i, 1});
        cells.push_back({0, k - 1, 2});
        cells.push_back({0, k, 3});
        cells.push_back({1, 0, 3});
        cells.push_back({1, -1, 2});
        cells.push_back({1, -k, 1});
        cells.push_back({1, k - 1, 3});
        cells.push_back({1, k, 2});
    } else {
        cells.push_back({0, -1, 3});
        cells.push_back({0, -2, 2});
        cells.push_back({0, -k, 3});
        cells.push_back({0, -k - 1, 1});
        cells.push_back({0, k - 2, 3});
        cells.push_back({0, k - 1, 2});
        cells.push_back({0, k, 3});
        cells.push_back({1, 0, 3});
        cells.push_back({1, -1, 1});
        cells.push_back({1, -2, 3});
        cells.push_back({1, -k, 1});
        cells.push_back({1, -k - 1, 3});
        cells.push_back({1, k - 2, 2});
        cells.push_back({1, k, 2});
    }
    return cells;
}

std::vector<PatternCell> prism5_pattern(int j) {
    std::vector<PatternCell> cells;
    cells.push_back({0, -1, 4});  // v^1_{2i}, one left of the anchor
    cells.push_back({0, 0, 0});   // v^1_{2i+1}, the anchor
    for (int t = 0; 2 * t <= j; ++t) cells.push_back({0, 1 + 2 * t, 3});
    for (int t = 0; 2 * t <= j - 2; ++t) cells.push_back({0, 2 + 2 * t, 2});
    for (int t = 0; 2 * t <= j - 2; ++t) cells.push_back({1, 1 + 2 * t, 1});
    for (int t = 0; 2 * t <= j - 2; ++t) cells.push_back({1, 2 + 2 * t, 3});
    cells.push_back({1, 1 + j, 2});
    return cells;
}

using Chain = std::vector<SegmentPalette>;

bool distinct_anchor_colors(const Chain& chain) {
    std::vector<int> seen;
    for (const auto& p : chain) seen.push_back(p[0]);
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

// All palettes extending `prev` across one segment link: positions listed in
// `pinned` are copied from the given source positions of prev, the remaining
// ones run over the unused colors in lexicographic order.
std::vector<SegmentPalette> link_extensions(const SegmentPalette& prev,
                                            const std::vector<std::pair<int, int>>& pinned) {
    SegmentPalette base{};
    std::vector<char> used(6, 0);
    for (auto [pos, src] : pinned) {
        base.c[pos] = prev[src];
        used[prev[src]] = 1;
    }
    std::vector<int> rest;
    for (int color = 1; color <= 5; ++color)
        if (!used[color]) rest.push_back(color);
    std::vector<int> open;
    for (int pos = 0; pos < 5; ++pos)
        if (base.c[pos] == 0) open.push_back(pos);
    std::vector<SegmentPalette> out;
    std::sort(rest.begin(), rest.end());
    do {
        SegmentPalette p = base;
        for (size_t i = 0; i < open.size(); ++i) p.c[open[i]] = rest[i];
        out.push_back(p);
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace

namespace detail {

Chain gp5_palette_chain(int n, int k) {
    const bool modified = (k % 2 == 1) && n == 10 * k - 4;
    Chain chain{SegmentPalette{{1, 2, 3, 4, 5}}};
    for (int i = 1; i < 5; ++i) {
        if (modified && i == 3)
            chain.push_back(alt_palette(chain.back()));
        else
            chain.push_back(next_palette(chain.back()));
    }
    return chain;
}

Chain prism5_palette_chain() {
    Chain chain{SegmentPalette{{1, 2, 3, 4, 5}}};
    for (int i = 1; i < 5; ++i) chain.push_back(prism_next_palette(chain.back()));
    return chain;
}

}  // namespace detail

namespace {

// Builds the fixed map for one palette chain; empty optional on any conflict.
std::optional<FixedMap> build_fixed_map(const Graph& g, int ring_len, int inner_base,
                                        const std::vector<int>& anchors,
                                        const std::vector<PatternCell>& pattern,
                                        const Chain& chain) {
    FixedMap fixed(g.vertex_count());
    try {
        for (size_t s = 0; s < anchors.size(); ++s) {
            for (const PatternCell& cell : pattern) {
                int column = mod(anchors[s] + cell.offset, ring_len);
                VertexId v = cell.ring == 0 ? column : inner_base + column;
                fixed.set(v, chain[s][cell.palette_pos]);
            }
        }
    } catch (const ConstructionError&) {
        return std::nullopt;
    }
    if (!fixed_cells_consistent(g, fixed, 5)) return std::nullopt;
    return fixed;
}

struct ChainSearch {
    std::vector<std::pair<int, int>> pinned;  // (position in next, source position in prev)

    // Primary chain first, then exhaustive deterministic search over the link
    // freedoms; returns every chain with distinct anchor colors.
    template <typename TryChain>
    bool enumerate(const Chain& primary, TryChain try_chain) const {
        if (distinct_anchor_colors(primary) && try_chain(primary, false)) return true;
        Chain chain{SegmentPalette{{1, 2, 3, 4, 5}}};
        auto dfs = [&](auto&& self) -> bool {
            if (chain.size() == 5) {
                if (!distinct_anchor_colors(chain)) return false;
                return try_chain(chain, true);
            }
            for (const SegmentPalette& p : link_extensions(chain.back(), pinned)) {
                chain.push_back(p);
                if (self(self)) return true;
                chain.pop_back();
            }
            return false;
        };
        return dfs(dfs);
    }
};

ConstructedColoring finish_construction(const Graph& g, const FixedMap& fixed,
                                        const std::vector<VertexId>& designated,
                                        const std::vector<std::string>& names,
                                        const char* what) {
    FillOutcome filled = fill_and_verify(g, fixed, 5, /*require_minimal=*/true);
    if (!filled.coloring)
        throw ConstructionError(ConstructionError::Kind::VerificationFailed,
                                std::string(what) + ": no verified completion exists");
    ConstructedColoring out;
    out.coloring = std::move(*filled.coloring);
    out.designated = designated;
    out.designated_names = names;
    out.fill_backtracked = filled.backtracked;
    if (!is_acyclic(g, out.coloring) || !is_ab_minimal(g, out.coloring).minimal ||
        colors_used(out.coloring) != 5)
        throw ConstructionError(ConstructionError::Kind::VerificationFailed,
                                std::string(what) + ": completed coloring failed re-verification");
    return out;
}

}  // namespace

ConstructedColoring color_gp5(int n, int k) {
    if (k < 3)
        throw ConstructionError(ConstructionError::Kind::ParameterInvalid,
                                "the G(n,k) five-coloring requires k >= 3, got k=" +
                                    std::to_string(k));
    const int sign = (k % 2 == 0) ? 1 : -1;
    const int bound = 5 * (2 * k + sign);
    if (n < bound)
        throw ConstructionError(ConstructionError::Kind::ParameterBelowBound,
                                "the G(n,k) five-coloring requires n >= 5(2k+(-1)^k) = " +
                                    std::to_string(bound) + ", got n=" + std::to_string(n));

    NamedGraph named = gen_petersen(n, k);
    const Graph& g = named.graph;
    const int step = (k % 2 == 1) ? 2 * k - 1 : 2 * k + 1;
    std::vector<int> anchors;
    for (int i = 0; i < 5; ++i) anchors.push_back(mod(step * i, n));
    const std::vector<PatternCell> pattern = gp5_pattern(k);

    std::optional<FixedMap> fixed = build_fixed_map(g, n, n, anchors, pattern,
                                                    detail::gp5_palette_chain(n, k));
    bool fallback = false;
    if (!fixed) {
        ChainSearch search;
        search.pinned = {{3, 2}, {1, 3}};  // c_{i+1}^3 = c_i^2, c_{i+1}^1 = c_i^3
        search.enumerate(detail::gp5_palette_chain(n, k), [&](const Chain& chain, bool searched) {
            auto candidate = build_fixed_map(g, n, n, anchors, pattern, chain);
            if (!candidate) return false;
            fixed = std::move(candidate);
            fallback = searched;
            return true;
        });
    }
    if (!fixed)
        throw ConstructionError(ConstructionError::Kind::VerificationFailed,
                                "G(n,k) segment patterns admit no consistent palette gluing");

    std::vector<std::string> names;
    for (int a : anchors) names.push_back(named.names[a]);
    ConstructedColoring out = finish_construction(
        g, *fixed, std::vector<VertexId>(anchors.begin(), anchors.end()), names, "color_gp5");
    out.palette_fallback = fallback;
    return out;
}

ConstructedColoring color_0j_prism5(int rim_len, int j) {
    if (j <= 0 || j % 2 != 0)
        throw ConstructionError(ConstructionError::Kind::ParameterInvalid,
                                "the (0,j)-prism five-coloring requires even j > 0, got j=" +
                                    std::to_string(j));
    if (rim_len % 2 != 0)
        throw ConstructionError(ConstructionError::Kind::ParameterInvalid,
                                "rim length must be even, got " + std::to_string(rim_len));
    if (rim_len < 5 * (j + 2))
        throw ConstructionError(ConstructionError::Kind::ParameterBelowBound,
                                "the (0,j)-prism five-coloring requires rim_len >= 5(j+2) = " +
                                    std::to_string(5 * (j + 2)) + ", got " +
                                    std::to_string(rim_len));

    NamedGraph named = gen_0j_prism(rim_len, j);
    const Graph& g = named.graph;
    std::vector<int> anchors;  // columns of v^1_{2i+1} with i = seg*(j+2)/2
    for (int seg = 0; seg < 5; ++seg) anchors.push_back(mod(seg * (j + 2) + 1, rim_len));
    const std::vector<PatternCell> pattern = prism5_pattern(j);

    std::optional<FixedMap> fixed = build_fixed_map(g, rim_len, rim_len, anchors, pattern,
                                                    detail::prism5_palette_chain());
    bool fallback = false;
    if (!fixed) {
        ChainSearch search;
        search.pinned = {{4, 3}};  // c_{k+1}^4 = c_k^3
        search.enumerate(detail::prism5_palette_chain(), [&](const Chain& chain, bool searched) {
            auto candidate = build_fixed_map(g, rim_len, rim_len, anchors, pattern, chain);
            if (!candidate) return false;
            fixed = std::move(candidate);
            fallback = searched;
            return true;
        });
    }
    if (!fixed)
        throw ConstructionError(ConstructionError::Kind::VerificationFailed,
                                "(0,j)-prism segment patterns admit no consistent palette gluing");

    std::vector<std::string> names;
    for (int a : anchors) names.push_back(named.names[a]);
    ConstructedColoring out = finish_construction(
        g, *fixed, std::vector<VertexId>(anchors.begin(), anchors.end()), names, "color_0j_prism5");
    out.palette_fallback = fallback;
    return out;
}

Coloring color_C_of_T4(const CubicTree& t) {
    validate_cubic_tree(t);
    NamedGraph named = gen_C_of_T(t);
    const Graph& g = named.graph;

    std::vector<int> tree_deg(t.n, 0);
    for (auto [a, b] : t.edges) {
        ++tree_deg[a];
        ++tree_deg[b];
    }
    FixedMap fixed(g.vertex_count());
    const std::vector<int>& pattern = h3_pattern_colors();
    int next_id = 0;
    for (int v = 0; v < t.n; ++v) {
        if (tree_deg[v] == 3) {
            next_id += 3;  // triangle corners stay free
        } else {
            for (int s = 0; s < 6; ++s) fixed.set(next_id + 1 + s, pattern[s]);  // w stays free
            next_id += 7;
        }
    }

    FillOutcome filled = fill_and_verify(g, fixed, 4, /*require_minimal=*/true);
    if (!filled.coloring)
        throw ConstructionError(ConstructionError::Kind::VerificationFailed,
                                "color_C_of_T4: no verified completion exists");
    Coloring out = std::move(*filled.coloring);
    if (!is_acyclic(g, out) || !is_ab_minimal(g, out).minimal || colors_used(out) != 4)
        throw ConstructionError(ConstructionError::Kind::VerificationFailed,
                                "color_C_of_T4: completed coloring failed re-verification");
    return out;
}

Coloring prism_ab4(int n) {
    if (n == 3)
        throw ConstructionError(ConstructionError::Kind::ParameterInvalid,
                                "G(3,1) is the prism K2 x K3, the lone exception with "
                                "acyclic b-chromatic number 3; prism_ab4 requires n >= 4");
    if (n < 4)
        throw ConstructionError(ConstructionError::Kind::ParameterInvalid,
                                "prism_ab4 requires n >= 4, got " + std::to_string(n));
    NamedGraph named = gen_petersen(n, 1);
    const Graph& g = named.graph;

    // period-four seed; wrap columns repaired greedily before de-cycling
    std::vector<int> seed_colors(2 * n);
    for (int i = 0; i < n; ++i) {
        seed_colors[i] = 1 + (i % 4);
        seed_colors[n + i] = 1 + ((i + 2) % 4);
    }
    for (VertexId v = 0; v < 2 * n; ++v) {
        auto clashes = [&](int color) {
            for (VertexId u : g.neighbors(v))
                if (seed_colors[u] == color) return true;
            return false;
        };
        if (clashes(seed_colors[v]))
            for (int color = 1; color <= 4; ++color)
                if (!clashes(color)) {
                    seed_colors[v] = color;
                    break;
                }
    }

    B4Result res = find_acyclic_b4(g, SearchBudget{}, Coloring(4, seed_colors));
    if (res.status == B4Result::Status::NoneExists)
        throw ConstructionError(ConstructionError::Kind::VerificationFailed,
                                "prism_ab4: exhaustive search found no witness, contradicting "
                                "the prism theorem");
    if (res.status != B4Result::Status::Found)
        throw ConstructionError(ConstructionError::Kind::BudgetExhausted,
                                "prism_ab4: search budget exhausted");
    Coloring out = std::move(*res.witness);
    if (!is_acyclic(g, out) || !is_ab_minimal(g, out).minimal || colors_used(out) != 4)
        throw ConstructionError(ConstructionError::Kind::VerificationFailed,
                                "prism_ab4: witness failed re-verification");
    return out;
}

}  // namespace abchrome
