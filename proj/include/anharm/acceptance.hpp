#pragma once

#include <string>
#include <vector>

namespace anharm {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail; // measured vs target numbers
};

// Runs the full release gate; one result per criterion, in a fixed order.
std::vector<CriterionResult> run_acceptance();

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace anharm
