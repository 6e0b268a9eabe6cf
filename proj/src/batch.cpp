#include "abchrome/batch.hpp"

#include <atomic>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "abchrome/io.hpp"

namespace abchrome {

bool SolveReport::budget_exhausted() const {
    auto hit = [](const std::optional<ValueResult>& r) { return r && r->budget_exhausted; };
    bool conj = conjecture && (conjecture->phi.budget_exhausted || conjecture->ab.budget_exhausted);
    return hit(a) || hit(phi) || hit(ab) || conj;
}

SolveReport solve_graph(const Graph& g, const std::string& graph6, const SolveRequest& request) {
    SolveReport report;
    report.graph6 = graph6;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.girth = girth(g);
    if (request.want_A) report.a = compute_A(g, request.budget);
    bool need_phi = request.want_phi || request.want_conjecture;
    bool need_ab = request.want_Ab || request.want_conjecture;
    std::optional<ValueResult> phi_res, ab_res;
    if (need_phi) phi_res = compute_phi(g, request.budget);
    if (need_ab) ab_res = compute_Ab(g, request.budget);
    if (request.want_phi) report.phi = phi_res;
    if (request.want_Ab) report.ab = ab_res;
    if (request.want_conjecture)
        report.conjecture = assemble_conjecture(report.girth, *phi_res, *ab_res);

    if (report.a && report.a->exact() && ab_res && ab_res->exact() &&
        *report.a->value > *ab_res->value)
        throw std::logic_error("invariant violation: A(G) > A_b(G)");
    if (is_cubic(g)) {
        if (report.a && report.a->exact() && *report.a->value > 4)
            throw std::logic_error("invariant violation: cubic graph with A(G) > 4");
        if (ab_res && ab_res->exact() && *ab_res->value > 5)
            throw std::logic_error("invariant violation: cubic graph with A_b(G) > 5");
    }
    return report;
}

nlohmann::json report_to_json(const SolveReport& report, bool stable_timing) {
    nlohmann::json j;
    j["graph6"] = report.graph6;
    j["n"] = report.n;
    j["m"] = report.m;
    if (report.girth)
        j["girth"] = *report.girth;
    else
        j["girth"] = "acyclic";
    if (report.a) j["A"] = value_result_to_json(*report.a, stable_timing);
    if (report.phi) j["phi"] = value_result_to_json(*report.phi, stable_timing);
    if (report.ab) j["Ab"] = value_result_to_json(*report.ab, stable_timing);
    if (report.conjecture) j["conjecture"] = conjecture_to_json(*report.conjecture, stable_timing);
    return j;
}

const char* batch_status_name(BatchRecord::Status s) {
    switch (s) {
        case BatchRecord::Status::Ok: return "ok";
        case BatchRecord::Status::BudgetExhausted: return "budget-exhausted";
        case BatchRecord::Status::InvalidInput: return "invalid-input";
    }
    return "invalid-input";
}

namespace {

BatchRecord solve_line(int line_no, const std::string& line, const SolveRequest& request) {
    BatchRecord rec;
    rec.line_no = line_no;
    rec.graph6 = line;
    try {
        Graph g = parse_graph6(line);
        rec.report = solve_graph(g, line, request);
        rec.status = rec.report->budget_exhausted() ? BatchRecord::Status::BudgetExhausted
                                                    : BatchRecord::Status::Ok;
    } catch (const GraphError& e) {
        rec.status = BatchRecord::Status::InvalidInput;
        rec.error = e.what();
    }
    return rec;
}

}  // namespace

std::vector<BatchRecord> run_batch(std::istream& input, const BatchOptions& options) {
    struct Job {
        int line_no;
        std::string text;
    };
    std::vector<Job> jobs;
    std::string line;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (options.skip_graph6.count(line)) continue;
        jobs.push_back(Job{line_no, line});
    }

    std::vector<BatchRecord> records(jobs.size());
    const int workers = std::max(1, options.workers);
    if (workers == 1 || jobs.size() <= 1) {
        for (size_t i = 0; i < jobs.size(); ++i)
            records[i] = solve_line(jobs[i].line_no, jobs[i].text, options.request);
    } else {
        std::atomic<size_t> next{0};
        auto work = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) return;
                records[i] = solve_line(jobs[i].line_no, jobs[i].text, options.request);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < std::min<int>(workers, static_cast<int>(jobs.size())); ++w)
            pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return records;
}

const char* const kBatchCsvHeader = "graph6,n,m,girth,A,phi,Ab,status,nodes,millis";

namespace {

std::string value_cell(const std::optional<ValueResult>& r) {
    if (!r) return "";
    if (r->exact()) return std::to_string(*r->value);
    return "unknown";
}

}  // namespace

void write_batch_csv(std::ostream& out, const std::vector<BatchRecord>& records,
                     bool stable_timing, bool with_header) {
    if (with_header) out << kBatchCsvHeader << "\n";
    for (const auto& rec : records) {
        out << rec.graph6 << ",";
        if (rec.report) {
            out << rec.report->n << "," << rec.report->m << ",";
            if (rec.report->girth)
                out << *rec.report->girth;
            else
                out << "acyclic";
            out << "," << value_cell(rec.report->a) << "," << value_cell(rec.report->phi) << ","
                << value_cell(rec.report->ab) << ",";
        } else {
            out << ",,,,,,";
        }
        out << batch_status_name(rec.status) << ",";
        long long nodes = 0, millis = 0;
        if (rec.report) {
            for (const std::optional<ValueResult>* r : {&rec.report->a, &rec.report->phi, &rec.report->ab}) {
                if (*r) {
                    nodes += (*r)->nodes;
                    millis += (*r)->millis;
                }
            }
        }
        out << nodes << "," << (stable_timing ? 0 : millis) << "\n";
    }
}

nlohmann::json batch_to_json(const std::vector<BatchRecord>& records, bool stable_timing) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rec : records) {
        nlohmann::json j;
        j["line"] = rec.line_no;
        j["graph6"] = rec.graph6;
        j["status"] = batch_status_name(rec.status);
        if (!rec.error.empty()) j["error"] = rec.error;
        if (rec.report) j["report"] = report_to_json(*rec.report, stable_timing);
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace abchrome
