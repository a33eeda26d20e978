#include <iostream>

#include "clonekit/acceptance.hpp"

int main() {
    std::vector<clonekit::CriterionResult> results = clonekit::run_acceptance();
    bool all = true;
    for (const clonekit::CriterionResult& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": "
                  << r.detail << "\n";
        all &= r.pass;
    }
    std::cout << (all ? "acceptance: all criteria passed" : "acceptance: FAILURES present")
              << std::endl;
    return all ? 0 : 1;
}
