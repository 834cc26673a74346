// verify.hpp — the library's invariant suite: every structural identity,
// bound, and rule the modules promise, checked at run time on the configured
// potentials plus a fixed set of built-in instances (a two-step well, a pure
// cosine, a constant).
//
// The suite is fully deterministic: fixed RNG seeds, fixed iteration order,
// fixed formatting — two runs on the same configuration produce byte-identical
// reports.

#pragma once

#include <string>
#include <vector>

#include "hj/config.hpp"
#include "hj/report.hpp"

namespace hj {

struct check_result {
    std::string name;    // dotted check id, e.g. "hill.unimodularity[cos2]"
    bool passed = false;
    double residual = 0.0;   // worst measured residual (count gap as a double)
    double tolerance = 0.0;  // the bound it was held against
    std::string detail;      // short context: samples, instance, subcase
};

// Run the full catalogue.  Configured potentials (if any) join the built-in
// instances for the generic checks; instance-specific rules always run on
// the built-ins so the suite's coverage does not depend on the config.
std::vector<check_result> run_verify_suite(const run_config& cfg);

// Text listing: one line per check ("ok <name> ..." / "FAIL <name> ..."),
// then a "verify: PASS (N checks)" or "verify: FAIL (k of N failed)" summary.
std::string verify_text(const std::vector<check_result>& results);

// Tabular form of the same results (columns: name, passed, residual,
// tolerance, detail).
report verify_report(const run_config& cfg,
                     const std::vector<check_result>& results);

}  // namespace hj
