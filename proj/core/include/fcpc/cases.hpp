#ifndef FCPC_CASES_HPP
#define FCPC_CASES_HPP

#include <functional>
#include <string>
#include <vector>

#include "fcpc/json_io.hpp"

namespace fcpc {

/**
 * Bundled reference cases: each rebuilds its artifacts from scratch and
 * diffs them against embedded golden values. Golden metadata tags every
 * value with a source marker: "given" for reference inputs carried by the
 * case, "definition" for immediate consequences, and "computed" for results
 * our own searches produce (reported as computed, never as given).
 */
struct CaseResult {
    enum class Status { Pass, Fail, BudgetExceeded };

    std::string id;
    Status status = Status::Pass;
    std::string detail;       // first failing check, when any
    Json artifacts;           // rebuilt artifacts with source markers
    double milliseconds = 0;
    uint64_t nodes_used = 0;
};

struct ExampleCase {
    std::string id;
    std::string summary;
    std::function<CaseResult(uint64_t node_budget)> run;
};

const std::vector<ExampleCase>& example_cases();
const ExampleCase& find_case(const std::string& id);

/// Runs every case against one shared node budget, spending it in order.
std::vector<CaseResult> run_all_examples(uint64_t total_node_budget);

}  // namespace fcpc

#endif
