#include "abchrome/coloring.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "abchrome/detail/cycle_probe.hpp"

namespace abchrome {

namespace {

constexpr int kInf = detail::kCycleInf;

using detail::cycle_through_vertex_exists;
using detail::lex_min_cycle_through_vertex;
using detail::shortest_cycle_through_vertex;

std::vector<VertexId> class_members(const Coloring& c, int color) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < c.size(); ++v)
        if (c.colors[v] == color) out.push_back(v);
    return out;
}

}  // namespace

void validate_coloring(const Graph& g, const Coloring& c) {
    if (c.size() != g.vertex_count())
        throw ColoringError(ColoringError::Kind::SizeMismatch,
                            "coloring covers " + std::to_string(c.size()) + " vertices, graph has " +
                                std::to_string(g.vertex_count()));
    if (c.k < 1)
        throw ColoringError(ColoringError::Kind::ColorOutOfRange, "palette size must be positive");
    for (VertexId v = 0; v < c.size(); ++v)
        if (c.colors[v] < 1 || c.colors[v] > c.k)
            throw ColoringError(ColoringError::Kind::ColorOutOfRange,
                                "vertex " + std::to_string(v) + " has color " +
                                    std::to_string(c.colors[v]) + " outside 1.." + std::to_string(c.k));
}

int colors_used(const Coloring& c) { return static_cast<int>(used_colors(c).size()); }

std::vector<int> used_colors(const Coloring& c) {
    std::vector<char> seen(c.k + 1, 0);
    for (int col : c.colors) seen[col] = 1;
    std::vector<int> out;
    for (int col = 1; col <= c.k; ++col)
        if (seen[col]) out.push_back(col);
    return out;
}

std::optional<std::pair<VertexId, VertexId>> find_improper_edge(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId w : g.neighbors(u))
            if (u < w && c.colors[u] == c.colors[w]) return std::make_pair(u, w);
    return std::nullopt;
}

bool is_proper(const Graph& g, const Coloring& c) { return !find_improper_edge(g, c).has_value(); }

std::optional<BicoloredCycle> find_bicolored_cycle(const Graph& g, const Coloring& c) {
    if (auto bad = find_improper_edge(g, c))
        throw ColoringError(ColoringError::Kind::ImproperInput,
                            "coloring is not proper: edge (" + std::to_string(bad->first) + "," +
                                std::to_string(bad->second) + ") is monochromatic");
    const auto used = used_colors(c);
    std::vector<VertexId> keep;
    for (size_t a = 0; a < used.size(); ++a) {
        for (size_t b = a + 1; b < used.size(); ++b) {
            keep.clear();
            for (VertexId v = 0; v < g.vertex_count(); ++v)
                if (c.colors[v] == used[a] || c.colors[v] == used[b]) keep.push_back(v);
            ForestCheck check = induced_subgraph_is_forest(g, keep);
            if (!check.is_forest())
                return BicoloredCycle{used[a], used[b], std::move(*check.cycle)};
        }
    }
    return std::nullopt;
}

bool is_acyclic(const Graph& g, const Coloring& c) { return !find_bicolored_cycle(g, c).has_value(); }

std::vector<int> missing_colors(const Graph& g, const Coloring& c, VertexId v) {
    validate_coloring(g, c);
    std::vector<char> present(c.k + 1, 0);
    present[c.colors[v]] = 1;
    for (VertexId w : g.neighbors(v)) present[c.colors[w]] = 1;
    std::vector<int> out;
    for (int col = 1; col <= c.k; ++col)
        if (!present[col]) out.push_back(col);
    return out;
}

std::vector<VertexId> b_vertices(const Graph& g, const Coloring& c, int color_i) {
    validate_coloring(g, c);
    std::vector<VertexId> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (c.colors[v] != color_i) continue;
        if (missing_colors(g, c, v).empty()) out.push_back(v);
    }
    return out;
}

namespace detail {

RecolorOutcome step_search_unchecked(const Graph& g, const Coloring& c, int class_color) {
    RecolorOutcome out;
    const std::vector<VertexId> members = class_members(c, class_color);
    if (members.empty()) {
        out.refusal = RecolorRefusal{RefusalKind::EmptyClass, std::nullopt};
        return out;
    }

    // Candidate replacement colors per class vertex. A candidate that closes a
    // bi-colored cycle when the vertex is recolored alone is unusable in any
    // step: such a cycle avoids the class, so no reassignment breaks it.
    struct Entry {
        VertexId v;
        std::vector<int> candidates;
    };
    std::vector<Entry> entries;
    entries.reserve(members.size());
    for (VertexId v : members) {
        std::vector<int> cands = missing_colors(g, c, v);
        if (cands.empty()) {
            out.refusal = RecolorRefusal{RefusalKind::BVertexPresent, v};
            return out;
        }
        std::vector<int> safe;
        for (int cand : cands) {
            bool blocked = false;
            for (int m = 1; m <= c.k && !blocked; ++m) {
                if (m == cand || m == class_color) continue;
                blocked = cycle_through_vertex_exists(g, v, [&](VertexId x) {
                    return c.colors[x] == cand || c.colors[x] == m;
                });
            }
            if (!blocked) safe.push_back(cand);
        }
        if (safe.empty()) {
            out.refusal = RecolorRefusal{RefusalKind::AllAssignmentsCyclic, v};
            return out;
        }
        entries.push_back(Entry{v, std::move(safe)});
    }

    // fail-first: fewest candidates first, ties by vertex id; candidates ascend
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        if (a.candidates.size() != b.candidates.size())
            return a.candidates.size() < b.candidates.size();
        return a.v < b.v;
    });

    const int n = g.vertex_count();
    std::vector<int> working(c.colors);
    for (VertexId v : members) working[v] = 0;  // unassigned class vertices are absent

    std::vector<std::pair<VertexId, int>> assignment;
    auto dfs = [&](auto&& self, size_t depth) -> bool {
        if (depth == entries.size()) return true;
        const Entry& e = entries[depth];
        for (int cand : e.candidates) {
            working[e.v] = cand;
            bool ok = true;
            for (int m = 1; m <= c.k && ok; ++m) {
                if (m == cand || m == class_color) continue;
                ok = !cycle_through_vertex_exists(g, e.v, [&](VertexId x) {
                    return working[x] == cand || working[x] == m;
                });
            }
            if (ok) {
                assignment.emplace_back(e.v, cand);
                if (self(self, depth + 1)) return true;
                assignment.pop_back();
            }
            working[e.v] = 0;
        }
        return false;
    };

    if (!dfs(dfs, 0)) {
        out.refusal = RecolorRefusal{RefusalKind::AllAssignmentsCyclic, entries.front().v};
        return out;
    }

    RecolorWitness w;
    w.class_color = class_color;
    w.replacement = std::move(assignment);
    std::sort(w.replacement.begin(), w.replacement.end());

    // a returned witness must re-verify through the public checks
    Coloring applied = apply_recoloring(c, w);
    (void)n;
    if (find_improper_edge(g, applied) || find_bicolored_cycle(g, applied))
        throw ColoringError(ColoringError::Kind::CyclicInput,
                            "internal defect: step witness failed re-verification");
    out.witness = std::move(w);
    return out;
}

MinimalityResult is_ab_minimal_unchecked(const Graph& g, const Coloring& c) {
    MinimalityResult res;
    for (int color : used_colors(c)) {
        RecolorOutcome step = step_search_unchecked(g, c, color);
        if (step.stepped()) {
            res.minimal = false;
            res.color = color;
            res.witness = std::move(step.witness);
            return res;
        }
    }
    res.minimal = true;
    return res;
}

}  // namespace detail

RecolorOutcome try_acyclic_recoloring_step(const Graph& g, const Coloring& c, int class_color) {
    if (auto cyc = find_bicolored_cycle(g, c))
        throw ColoringError(ColoringError::Kind::CyclicInput,
                            "input coloring is not acyclic: colors {" + std::to_string(cyc->color_a) +
                                "," + std::to_string(cyc->color_b) + "} induce a cycle");
    return detail::step_search_unchecked(g, c, class_color);
}

Coloring apply_recoloring(const Coloring& c, const RecolorWitness& w) {
    Coloring out = c;
    for (const auto& [v, col] : w.replacement) {
        if (v < 0 || v >= c.size() || col < 1 || col > c.k || col == w.class_color)
            throw ColoringError(ColoringError::Kind::ColorOutOfRange, "invalid recolor witness entry");
        if (c.colors[v] != w.class_color)
            throw ColoringError(ColoringError::Kind::ColorOutOfRange,
                                "recolor witness touches vertex outside its class");
        out.colors[v] = col;
    }
    return out;
}

MinimalityResult is_ab_minimal(const Graph& g, const Coloring& c) {
    if (auto cyc = find_bicolored_cycle(g, c))
        throw ColoringError(ColoringError::Kind::CyclicInput,
                            "input coloring is not acyclic: colors {" + std::to_string(cyc->color_a) +
                                "," + std::to_string(cyc->color_b) + "} induce a cycle");
    return detail::is_ab_minimal_unchecked(g, c);
}

bool BlockReport::fully_blocked() const {
    if (entries.empty()) return false;
    for (const auto& e : entries)
        if (e.free()) return false;
    return true;
}

BlockReport blocking_report(const Graph& g, const Coloring& c, VertexId v) {
    validate_coloring(g, c);
    BlockReport report;
    report.vertex = v;
    const int own = c.colors[v];
    for (int cand : missing_colors(g, c, v)) {
        int best_len = kInf;
        for (int m = 1; m <= c.k; ++m) {
            if (m == cand || m == own) continue;
            auto include = [&](VertexId x) {
                return x != v && (c.colors[x] == cand || c.colors[x] == m);
            };
            best_len = std::min(best_len, shortest_cycle_through_vertex(g, v, include));
        }
        BlockEntry entry{cand, std::nullopt};
        if (best_len != kInf) {
            std::vector<VertexId> best_seq;
            for (int m = 1; m <= c.k; ++m) {
                if (m == cand || m == own) continue;
                auto include = [&](VertexId x) {
                    return x == v || c.colors[x] == cand || c.colors[x] == m;
                };
                auto seq = lex_min_cycle_through_vertex(g, v, best_len, include);
                if (!seq.empty() && (best_seq.empty() || seq < best_seq)) best_seq = std::move(seq);
            }
            entry.cycle = CycleWitness{std::move(best_seq)};
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

AbShape classify_ab_vertex_shape(const Graph& g, const Coloring& c, VertexId v) {
    validate_coloring(g, c);
    if (!is_cubic(g))
        throw ColoringError(ColoringError::Kind::NonCubicGraph,
                            "acyclic b-vertex shapes are defined for cubic graphs only");
    if (missing_colors(g, c, v).empty()) return AbShape::BVertex;
    std::vector<int> nbr_colors;
    for (VertexId w : g.neighbors(v)) nbr_colors.push_back(c.colors[w]);
    std::sort(nbr_colors.begin(), nbr_colors.end());
    nbr_colors.erase(std::unique(nbr_colors.begin(), nbr_colors.end()), nbr_colors.end());
    if (nbr_colors.size() == 1) return AbShape::TypeA;
    if (nbr_colors.size() == 2) return AbShape::TypeB;
    return AbShape::None;
}

Coloring compress_palette(const Coloring& c) {
    std::vector<int> remap(c.k + 1, 0);
    int next = 0;
    for (int col : used_colors(c)) remap[col] = ++next;
    Coloring out;
    out.k = next;
    out.colors.reserve(c.colors.size());
    for (int col : c.colors) out.colors.push_back(remap[col]);
    return out;
}

int bicolored_cycle_space_dimension(const Graph& g, const Coloring& c) {
    validate_coloring(g, c);
    const auto used = used_colors(c);
    const int n = g.vertex_count();
    int total = 0;
    std::vector<int> comp(n);
    for (size_t a = 0; a < used.size(); ++a) {
        for (size_t b = a + 1; b < used.size(); ++b) {
            auto in_pair = [&](VertexId x) {
                return c.colors[x] == used[a] || c.colors[x] == used[b];
            };
            std::fill(comp.begin(), comp.end(), -1);
            int vertices = 0, edge_ends = 0, components = 0;
            for (VertexId s = 0; s < n; ++s) {
                if (!in_pair(s) || comp[s] != -1) continue;
                ++components;
                std::deque<VertexId> queue{s};
                comp[s] = components;
                while (!queue.empty()) {
                    VertexId u = queue.front();
                    queue.pop_front();
                    ++vertices;
                    for (VertexId w : g.neighbors(u)) {
                        if (!in_pair(w)) continue;
                        ++edge_ends;
                        if (comp[w] == -1) {
                            comp[w] = components;
                            queue.push_back(w);
                        }
                    }
                }
            }
            total += edge_ends / 2 - vertices + components;
        }
    }
    return total;
}

}  // namespace abchrome
