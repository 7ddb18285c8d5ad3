#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hh/suites.hpp"

namespace hh {

// Files produced by one emit run: {filename, content} pairs, ready to be
// written to an output directory or streamed. Content is byte-deterministic
// for a fixed config.
struct EmitResult {
    std::vector<std::pair<std::string, std::string>> files;
};

// Known targets, in the order `emit all` produces them:
//   profile - radial values of the bounded spherical functions psi_0..psi_kmax
//             on r in [0, 4] (CSV; computed from Laguerre coefficients and
//             Horner evaluation, independently of the polynomial evaluator)
//   matrix  - sparse JSON of the transform of psi_{min(kmax,N)} on the
//             N-truncation (a band projector, exact entries)
//   table   - expansion coefficients of the plain gaussian against the
//             spherical levels 0..kmax, both computation routes, as exact
//             scalar strings (JSON)
const std::vector<std::string>& emit_targets();

// Builds the named target from the config. Throws domain_error on an unknown
// target or an infeasible config (same limits as the verification suites).
EmitResult emit_target(const std::string& target, const SuiteConfig& cfg);

} // namespace hh
