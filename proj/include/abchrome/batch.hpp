#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "abchrome/graph.hpp"
#include "abchrome/solver.hpp"

namespace abchrome {

struct SolveRequest {
    bool want_A = false;
    bool want_phi = false;
    bool want_Ab = false;
    bool want_conjecture = false;
    SearchBudget budget;
};

struct SolveReport {
    std::string graph6;
    int n = 0;
    int m = 0;
    std::optional<int> girth;  // empty = acyclic graph
    std::optional<ValueResult> a;
    std::optional<ValueResult> phi;
    std::optional<ValueResult> ab;
    std::optional<ConjectureProbe> conjecture;

    bool budget_exhausted() const;
};

// Runs the requested computations and enforces the cross-value bounds
// (A <= A_b; on cubic inputs A <= 4 and A_b <= 5).
SolveReport solve_graph(const Graph& g, const std::string& graph6, const SolveRequest& request);

nlohmann::json report_to_json(const SolveReport& report, bool stable_timing = false);

struct BatchRecord {
    int line_no = 0;  // 1-based line in the input file
    std::string graph6;
    enum class Status { Ok, BudgetExhausted, InvalidInput } status = Status::Ok;
    std::string error;
    std::optional<SolveReport> report;
};

const char* batch_status_name(BatchRecord::Status s);

struct BatchOptions {
    SolveRequest request;
    int workers = 1;
    bool stable_output = false;           // zero timing fields in emitted records
    std::set<std::string> skip_graph6;    // already-done keys (--skip-done)
};

// One record per non-comment input line, in input order regardless of the
// worker count. Lines whose graph6 string is in skip_graph6 are omitted.
std::vector<BatchRecord> run_batch(std::istream& input, const BatchOptions& options);

extern const char* const kBatchCsvHeader;

void write_batch_csv(std::ostream& out, const std::vector<BatchRecord>& records,
                     bool stable_timing, bool with_header = true);
nlohmann::json batch_to_json(const std::vector<BatchRecord>& records, bool stable_timing);

}  // namespace abchrome
