#pragma once

#include <string>
#include <vector>

namespace schurcalc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    long checks = 0;     // individual assertions evaluated
    std::string detail;  // first failure, or a summary
};

/// Runs the acceptance criteria. Ranges in d are the documented ones, capped
/// at `d_max`. Deterministic.
std::vector<CriterionResult> run_acceptance(int d_max = 12);

}  // namespace schurcalc
