#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "abchrome/batch.hpp"
#include "abchrome/constructions.hpp"
#include "abchrome/families.hpp"
#include "abchrome/io.hpp"
#include "abchrome/solver.hpp"

namespace {

using abchrome::Coloring;
using abchrome::Graph;
using abchrome::NamedGraph;
using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInternal = 5;

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseFailure("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw ParseFailure("cannot write file: " + path);
    out << contents;
}

void write_names(const std::string& path, const NamedGraph& named) {
    write_file(path, json(named.names).dump(2) + "\n");
}

abchrome::CubicTree parse_tree_spec(const std::string& spec) {
    if (spec == "k2") return abchrome::CubicTree{2, {{0, 1}}};
    if (spec == "k13") return abchrome::CubicTree{4, {{0, 1}, {0, 2}, {0, 3}}};
    abchrome::CubicTree t;
    std::stringstream in(spec);
    std::string part;
    int max_id = -1;
    while (std::getline(in, part, ',')) {
        auto dash = part.find('-');
        if (dash == std::string::npos)
            throw UsageFailure("tree edge must look like '0-1', got '" + part + "'");
        int a = std::stoi(part.substr(0, dash));
        int b = std::stoi(part.substr(dash + 1));
        t.edges.emplace_back(a, b);
        max_id = std::max({max_id, a, b});
    }
    t.n = max_id + 1;
    return t;
}

abchrome::SolveRequest parse_targets(const std::string& targets, const abchrome::SearchBudget& budget) {
    abchrome::SolveRequest req;
    req.budget = budget;
    std::stringstream in(targets);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part == "A")
            req.want_A = true;
        else if (part == "phi")
            req.want_phi = true;
        else if (part == "Ab")
            req.want_Ab = true;
        else if (part == "conjecture")
            req.want_conjecture = true;
        else
            throw UsageFailure("unknown target '" + part + "' (expected A, phi, Ab, conjecture)");
    }
    return req;
}

int default_workers() {
    if (const char* env = std::getenv("ABCHROME_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

int run_check(const std::string& graph6, const std::string& coloring_file, const std::string& mode) {
    Graph g = abchrome::parse_graph6(graph6);
    Coloring c = abchrome::parse_coloring(read_file(coloring_file));
    json verdict;
    verdict["mode"] = mode;
    bool ok = false;
    if (mode == "proper") {
        auto bad = abchrome::find_improper_edge(g, c);
        ok = !bad.has_value();
        if (bad) verdict["offending_edge"] = {bad->first, bad->second};
    } else if (mode == "acyclic") {
        auto cyc = abchrome::find_bicolored_cycle(g, c);
        ok = !cyc.has_value();
        if (cyc) {
            verdict["colors"] = {cyc->color_a, cyc->color_b};
            verdict["cycle"] = abchrome::cycle_to_json(cyc->cycle);
        }
    } else if (mode == "abmin") {
        auto res = abchrome::is_ab_minimal(g, c);
        ok = res.minimal;
        if (!res.minimal) {
            verdict["color"] = *res.color;
            verdict["witness"] = abchrome::recolor_witness_to_json(*res.witness);
        }
    } else {
        throw UsageFailure("unknown check mode '" + mode + "' (expected proper, acyclic, abmin)");
    }
    verdict["verdict"] = ok;
    std::cout << verdict.dump(2) << "\n";
    return ok ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact acyclic b-coloring toolkit for cubic graphs"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate a named graph family as graph6");
    gen->require_subcommand(1);
    std::string names_file;

    int pet_n = 0, pet_k = 0;
    auto* gen_pet = gen->add_subcommand("petersen", "generalized Petersen graph G(n,k)");
    gen_pet->add_option("n", pet_n, "outer cycle length")->required();
    gen_pet->add_option("k", pet_k, "inner star step")->required();
    gen_pet->add_option("--names", names_file, "write the vertex name map as JSON");

    int prism_rim = 0, prism_j = 0;
    auto* gen_prism = gen->add_subcommand("prism0j", "(0,j)-prism with the given rim length");
    gen_prism->add_option("--rim", prism_rim, "rim length (each rim, even)")->required();
    gen_prism->add_option("--j", prism_j, "spoke offset (even)")->required();
    gen_prism->add_option("--names", names_file, "write the vertex name map as JSON");

    auto* gen_h3 = gen->add_subcommand("h3", "the 7-vertex H3 gadget");
    gen_h3->add_option("--names", names_file, "write the vertex name map as JSON");

    std::string tree_spec;
    auto* gen_coft = gen->add_subcommand("coft", "C(T) for a cubic tree");
    gen_coft->add_option("--tree", tree_spec, "k2, k13, or an edge list like 0-1,0-2,0-3")
        ->required();
    gen_coft->add_option("--names", names_file, "write the vertex name map as JSON");

    std::string sporadic_name, sporadic_coloring;
    auto* gen_spor = gen->add_subcommand("sporadic", "a fixture graph with its known coloring");
    gen_spor->add_option("name", sporadic_name, "petersen, k33, prism3, or g1")->required();
    gen_spor->add_option("--coloring", sporadic_coloring, "write the fixture coloring as JSON");
    gen_spor->add_option("--names", names_file, "write the vertex name map as JSON");

    // ---- check --------------------------------------------------------
    std::string check_graph6, check_coloring, check_mode = "acyclic";
    auto* check = app.add_subcommand("check", "verify a coloring against a graph");
    check->add_option("graph6", check_graph6, "graph in graph6 form")->required();
    check->add_option("--coloring", check_coloring, "coloring file (JSON or plain ints)")
        ->required();
    check->add_option("--mode", check_mode, "proper, acyclic, or abmin");

    // ---- solve --------------------------------------------------------
    std::string solve_graph6, solve_targets = "A,phi,Ab";
    long long budget_nodes = 0, budget_ms = 0;
    bool strict = false, stable_output = false, with_witness = false;
    auto* solve = app.add_subcommand("solve", "compute exact invariants of one graph");
    solve->add_option("graph6", solve_graph6, "graph in graph6 form")->required();
    solve->add_option("--targets", solve_targets, "comma list of A, phi, Ab, conjecture");
    solve->add_option("--budget-nodes", budget_nodes, "node budget per invariant");
    solve->add_option("--budget-ms", budget_ms, "time budget per invariant, milliseconds");
    solve->add_flag("--strict", strict, "exit 4 when any budget is exhausted");
    solve->add_flag("--stable-output", stable_output, "zero the timing fields");
    solve->add_flag("--witness", with_witness, "include witness colorings");

    // ---- batch --------------------------------------------------------
    std::string batch_input, batch_out, batch_format = "csv", batch_targets = "A,phi,Ab";
    int workers = default_workers();
    bool skip_done = false;
    auto* batch = app.add_subcommand("batch", "solve every graph6 line of a file");
    batch->add_option("input", batch_input, "input file, one graph6 per line, # comments")
        ->required();
    batch->add_option("--out", batch_out, "output file (default stdout)");
    batch->add_option("--format", batch_format, "csv or json");
    batch->add_option("--targets", batch_targets, "comma list of A, phi, Ab, conjecture");
    batch->add_option("--budget-nodes", budget_nodes, "node budget per invariant");
    batch->add_option("--budget-ms", budget_ms, "time budget per invariant, milliseconds");
    batch->add_option("--workers", workers, "worker threads (env ABCHROME_WORKERS)");
    batch->add_flag("--skip-done", skip_done, "skip graph6 keys already present in --out");
    batch->add_flag("--strict", strict, "exit 4 when any budget is exhausted");
    batch->add_flag("--stable-output", stable_output, "zero the timing fields");

    // ---- construct ----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "emit a theorem coloring with its graph");
    construct->require_subcommand(1);
    int gp5_n = 0, gp5_k = 0;
    auto* con_gp5 = construct->add_subcommand("gp5", "five-coloring of G(n,k), k >= 3");
    con_gp5->add_option("n", gp5_n)->required();
    con_gp5->add_option("k", gp5_k)->required();
    int c_rim = 0, c_j = 0;
    auto* con_prism5 = construct->add_subcommand("prism5", "five-coloring of a (0,j)-prism");
    con_prism5->add_option("--rim", c_rim)->required();
    con_prism5->add_option("--j", c_j)->required();
    std::string con_tree;
    auto* con_coft = construct->add_subcommand("coft4", "four-coloring of C(T)");
    con_coft->add_option("--tree", con_tree, "k2, k13, or an edge list")->required();
    int ab4_n = 0;
    auto* con_ab4 = construct->add_subcommand("prismab4", "minimal 4-coloring of G(n,1)");
    con_ab4->add_option("n", ab4_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    abchrome::SearchBudget budget;
    if (budget_nodes > 0) budget.max_nodes = budget_nodes;
    if (budget_ms > 0) budget.max_millis = budget_ms;

    try {
        if (gen_pet->parsed() || gen_prism->parsed() || gen_h3->parsed() || gen_coft->parsed() ||
            gen_spor->parsed()) {
            NamedGraph named;
            if (gen_pet->parsed()) {
                named = abchrome::gen_petersen(pet_n, pet_k);
            } else if (gen_prism->parsed()) {
                named = abchrome::gen_0j_prism(prism_rim, prism_j);
            } else if (gen_h3->parsed()) {
                named = abchrome::gen_H3();
            } else if (gen_coft->parsed()) {
                named = abchrome::gen_C_of_T(parse_tree_spec(tree_spec));
            } else {
                abchrome::Sporadic which;
                if (sporadic_name == "petersen")
                    which = abchrome::Sporadic::Petersen;
                else if (sporadic_name == "k33")
                    which = abchrome::Sporadic::K33;
                else if (sporadic_name == "prism3")
                    which = abchrome::Sporadic::Prism3;
                else if (sporadic_name == "g1")
                    which = abchrome::Sporadic::G1;
                else
                    throw UsageFailure("unknown sporadic graph '" + sporadic_name + "'");
                auto fx = abchrome::gen_sporadic(which);
                named = fx.named;
                if (!sporadic_coloring.empty())
                    write_file(sporadic_coloring,
                               abchrome::coloring_to_json(fx.coloring).dump(2) + "\n");
            }
            std::cout << abchrome::emit_graph6(named.graph) << "\n";
            if (!names_file.empty()) write_names(names_file, named);
            return kExitTrue;
        }

        if (check->parsed()) return run_check(check_graph6, check_coloring, check_mode);

        if (solve->parsed()) {
            Graph g = abchrome::parse_graph6(solve_graph6);
            abchrome::SolveRequest req = parse_targets(solve_targets, budget);
            abchrome::SolveReport report = abchrome::solve_graph(g, solve_graph6, req);
            json j = abchrome::report_to_json(report, stable_output);
            if (!with_witness) {
                for (const char* key : {"A", "phi", "Ab"})
                    if (j.contains(key)) j[key].erase("witness");
                if (j.contains("conjecture"))
                    for (const char* key : {"phi", "Ab"}) j["conjecture"][key].erase("witness");
            }
            std::cout << j.dump(2) << "\n";
            if (strict && report.budget_exhausted()) return kExitBudget;
            return kExitTrue;
        }

        if (batch->parsed()) {
            abchrome::BatchOptions options;
            options.request = parse_targets(batch_targets, budget);
            options.workers = workers;
            options.stable_output = stable_output;
            std::string existing;
            if (skip_done && !batch_out.empty()) {
                std::ifstream prior(batch_out);
                if (prior) {
                    std::string line;
                    bool first = true;
                    std::ostringstream keep;
                    while (std::getline(prior, line)) {
                        keep << line << "\n";
                        if (batch_format == "csv" && first && line.rfind("graph6,", 0) == 0) {
                            first = false;
                            continue;
                        }
                        first = false;
                        auto comma = line.find(',');
                        if (comma != std::string::npos)
                            options.skip_graph6.insert(line.substr(0, comma));
                    }
                    existing = keep.str();
                }
            }
            std::ifstream in(batch_input);
            if (!in) throw ParseFailure("cannot read input file: " + batch_input);
            auto records = abchrome::run_batch(in, options);

            std::ostringstream body;
            if (batch_format == "csv") {
                abchrome::write_batch_csv(body, records, stable_output,
                                          /*with_header=*/existing.empty());
            } else if (batch_format == "json") {
                body << abchrome::batch_to_json(records, stable_output).dump(2) << "\n";
            } else {
                throw UsageFailure("unknown batch format '" + batch_format + "'");
            }
            if (batch_out.empty()) {
                std::cout << body.str();
            } else {
                std::ofstream out(batch_out);
                if (!out) throw ParseFailure("cannot write output file: " + batch_out);
                out << existing << body.str();
            }
            if (strict)
                for (const auto& rec : records)
                    if (rec.status == abchrome::BatchRecord::Status::BudgetExhausted)
                        return kExitBudget;
            return kExitTrue;
        }

        if (construct->parsed()) {
            // graphs beyond the graph6 v1 order limit are emitted as edge lists
            auto graph_json = [](json& j, const Graph& g) {
                j["n"] = g.vertex_count();
                if (g.vertex_count() <= 62) {
                    j["graph6"] = abchrome::emit_graph6(g);
                } else {
                    j["graph6"] = nullptr;
                    json edges = json::array();
                    for (auto [a, b] : g.edges()) edges.push_back({a, b});
                    j["edges"] = std::move(edges);
                }
            };
            json j;
            if (con_gp5->parsed()) {
                auto named = abchrome::gen_petersen(gp5_n, gp5_k);
                auto built = abchrome::color_gp5(gp5_n, gp5_k);
                j["family"] = "gp5";
                graph_json(j, named.graph);
                j["names"] = named.names;
                j["coloring"] = abchrome::coloring_to_json(built.coloring);
                j["designated"] = built.designated;
                j["designated_names"] = built.designated_names;
            } else if (con_prism5->parsed()) {
                auto named = abchrome::gen_0j_prism(c_rim, c_j);
                auto built = abchrome::color_0j_prism5(c_rim, c_j);
                j["family"] = "prism5";
                graph_json(j, named.graph);
                j["names"] = named.names;
                j["coloring"] = abchrome::coloring_to_json(built.coloring);
                j["designated"] = built.designated;
                j["designated_names"] = built.designated_names;
            } else if (con_coft->parsed()) {
                auto tree = parse_tree_spec(con_tree);
                auto named = abchrome::gen_C_of_T(tree);
                j["family"] = "coft4";
                graph_json(j, named.graph);
                j["names"] = named.names;
                j["coloring"] = abchrome::coloring_to_json(abchrome::color_C_of_T4(tree));
            } else {
                auto named = abchrome::gen_petersen(ab4_n, 1);
                j["family"] = "prismab4";
                graph_json(j, named.graph);
                j["names"] = named.names;
                j["coloring"] = abchrome::coloring_to_json(abchrome::prism_ab4(ab4_n));
            }
            std::cout << j.dump(2) << "\n";
            return kExitTrue;
        }
    } catch (const UsageFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const abchrome::FamilyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const abchrome::ConstructionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.kind() == abchrome::ConstructionError::Kind::BudgetExhausted) return kExitBudget;
        if (e.kind() == abchrome::ConstructionError::Kind::VerificationFailed) return kExitInternal;
        return kExitUsage;
    } catch (const ParseFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const abchrome::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const abchrome::ColoringError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
