#pragma once

#include <string>
#include <vector>

namespace dilute1d::acceptance {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
    double target_seconds = 0.0;
};

constexpr int kCriteria = 11;

/// Runs one criterion (1..11). Errors inside a criterion become a failed
/// result whose detail carries the message.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_all();

/// "criterion  N: PASS  <title> [t s / target s] <detail>".
std::string format_line(const CriterionResult& r);

}  // namespace dilute1d::acceptance
