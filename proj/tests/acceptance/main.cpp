// Acceptance runner: one PASS/FAIL line per criterion. With an argument it
// runs only that criterion and exits 1 when it fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
    using namespace dilute1d::acceptance;
    bool all = true;
    if (argc > 1) {
        const CriterionResult r = run_criterion(std::atoi(argv[1]));
        std::cout << format_line(r) << std::endl;
        return r.passed ? 0 : 1;
    }
    int passed = 0;
    for (int id = 1; id <= kCriteria; ++id) {
        const CriterionResult r = run_criterion(id);
        std::cout << format_line(r) << std::endl;
        all = all && r.passed;
        passed += r.passed ? 1 : 0;
    }
    std::cout << passed << "/" << kCriteria << " criteria passed" << std::endl;
    return all ? 0 : 1;
}
