#include "anharm/acceptance.hpp"

#include <cstdio>

// Release gate: one line per criterion, exit 0 only if everything passed.
int main() {
    const std::vector<anharm::CriterionResult> results = anharm::run_acceptance();
    int passed = 0;
    for (const anharm::CriterionResult& r : results) {
        std::printf("%s %2d %s: %s\n", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                    r.detail.c_str());
        if (r.passed)
            ++passed;
    }
    std::printf("SUMMARY: %d/%zu criteria passed\n", passed, results.size());
    return anharm::all_passed(results) ? 0 : 1;
}
