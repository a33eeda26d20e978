#pragma once

#include <string>
#include <vector>

#include "clonekit/core.hpp"

// Desk-scale verification matrix: exhaustive property checks of the order
// axioms, substitution-map transport, encoding-relation monotonicity, the representation sweep,
// the determining-relation instance, the dual membership oracles and the
// group formula round-trip. Run by both the acceptance test binary and the
// CLI selftest subcommand.

namespace clonekit {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs all twelve criteria with the given caps; thread_count in limits is
/// honored by the parallel paths and criterion 12 re-runs three criteria at
/// 1 and 4 threads comparing report bytes.
std::vector<CriterionResult> run_acceptance(const Limits& limits = {});

/// Deterministic textual reports reused by the determinism criterion.
std::string report_phi_monotonicity(const Limits& limits);     // criterion 4 run
std::string report_determination_instance(const Limits& limits);  // criterion 7 run
std::string report_dual_oracle(const Limits& limits);          // criterion 8 run

}  // namespace clonekit
