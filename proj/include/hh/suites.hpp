#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hh/context.hpp"
#include "hh/report.hpp"

namespace hh {

// Parameters of one verification-suite run. Every randomized draw inside a
// suite comes from a generator seeded deterministically from `seed` and the
// check name, so a fixed config reproduces the run byte-for-byte (the wall
// times are the only nondeterministic report field).
struct SuiteConfig {
    Family fam = Family::un(); // product suites fall back to prod(1, n-1)
    int n = 2;                 // total complex dimension (n1 + n2 for products)
    Rat lambda = Rat(1);       // nonzero representation parameter
    unsigned N = 8;            // truncation cutoff
    unsigned kmax = 4;         // top spherical level exercised
    unsigned pmax = 2;         // top holomorphic bidegree exercised
    unsigned qmax = 2;         // top antiholomorphic bidegree exercised
    uint64_t seed = 1;
    std::string mode = "both"; // "exact" | "oracle" | "both"

    WeylContext context() const { return WeylContext(n, lambda); }
};

// All suite names, in the canonical run order.
const std::vector<std::string>& suite_names();

// Run one suite and return its report. Throws domain_error on an unknown
// name or an infeasible configuration (detected before any check runs:
// oversized truncations, spherical levels the truncation cannot see, block
// structure the suite cannot use). Checks whose mode is filtered out by
// cfg.mode are omitted from the report; checks a particular config cannot
// exercise (for example a negative-parameter shift kernel) appear with
// status "skip" and an explanatory note.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace hh
