// Verification suites: one entry point per theorem-sized check, shared by the
// command-line driver, the unit tests and the acceptance run.  Each suite is
// a pure function of its options and returns one result per checked instance.
#ifndef YW_SUITES_HPP
#define YW_SUITES_HPP

#include <string>
#include <vector>

#include "yw/parabolic.hpp"

namespace yw {

struct SuiteOptions {
    std::vector<int> q;  // pyramid column sizes (pyramid suites)
    int v = 1;           // pyramid pivot
    int w = 1;           // split column (miura-split, parabolic-compat)
    int n = 3;           // Yangian rank (yang-ev, yang-coproduct)
    int m = 3;           // embedded rank (yang-psi, extended)
    int add = 1;         // rank extension (yang-psi, extended)
    int depth = 2;       // truncation depth
    bool diagnose = false;
    char side = 'R';     // extended-relation side
    int mutation = 0;    // nonzero corrupts one coefficient (sensitivity runs)
};

struct SuiteReport {
    std::string suite;
    std::string params;  // human-readable parameter echo
    std::vector<CheckResult> instances;
    double wall_time = 0.0;

    bool all_ok() const {
        for (const auto& r : instances)
            if (!r.ok) return false;
        return true;
    }
};

// Known suite names, in the canonical order.
const std::vector<std::string>& suite_names();

// Run one suite; throws std::invalid_argument on bad parameters.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace yw

#endif
