#pragma once

#include <stdexcept>
#include <string>

namespace hh {

// Base for all library errors.
struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing objects built over different (n, lambda) contexts, or different
// gauss_t where a single one is required.
struct context_error : error {
    explicit context_error(const std::string& what) : error(what) {}
};

// An operation would exceed the global polynomial degree cap.
struct degree_error : error {
    explicit degree_error(const std::string& what) : error(what) {}
};

// Mathematically invalid input (divergent integral, non-harmonic polynomial
// where a harmonic one is required, vanishing Laguerre value, ...).
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

// Request exceeds a Fock truncation (index outside |nu| <= N, unsafe column).
struct truncation_error : error {
    explicit truncation_error(const std::string& what) : error(what) {}
};

// Malformed serialized data.
struct serialization_error : error {
    explicit serialization_error(const std::string& what) : error(what) {}
};

// Global degree cap for exact polynomial data. Default 64; the environment
// variable HH_MAX_DEGREE overrides (read once per process).
unsigned max_degree();

} // namespace hh
