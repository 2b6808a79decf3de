// End-to-end acceptance suite: nine numbered criteria covering the pinned
// fixtures, the witness tables, randomized soundness/completeness sweeps,
// class properties, transform properties, and the solver oracle.  The
// acceptance binary prints one pass/fail line per criterion; the CLI's
// `selftest` verb runs the fixture-pinned subset (1-4).
#pragma once

#include <string>
#include <vector>

namespace ndg {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // measured values / first failure
    double seconds = 0.0;
};

CriterionResult run_criterion(int index);  // 1..9; throws bad_parameter otherwise
std::vector<CriterionResult> run_criteria(const std::vector<int>& indices);
std::vector<CriterionResult> run_all_criteria();

// Render results as an aligned pass/fail table.
std::string criteria_table(const std::vector<CriterionResult>& results);

} // namespace ndg
