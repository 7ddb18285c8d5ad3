#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "hh/rational.hpp"

namespace hh {

// Multi-index over n coordinates.
using MIdx = std::vector<uint32_t>;

inline uint32_t mi_degree(const MIdx& m) {
    return std::accumulate(m.begin(), m.end(), uint32_t{0});
}

inline MIdx mi_zero(std::size_t n) { return MIdx(n, 0); }

inline MIdx mi_unit(std::size_t n, std::size_t j) {
    MIdx m(n, 0);
    m.at(j) = 1;
    return m;
}

inline MIdx mi_add(const MIdx& a, const MIdx& b) {
    MIdx r(a);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += b[j];
    return r;
}

// Componentwise a - b; caller must ensure b <= a.
inline MIdx mi_sub(const MIdx& a, const MIdx& b) {
    MIdx r(a);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= b[j];
    return r;
}

inline bool mi_le(const MIdx& a, const MIdx& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

inline Int mi_factorial(const MIdx& m) {
    Int r(1);
    for (uint32_t v : m) r *= factorial(v);
    return r;
}

// prod_j binom(a_j, b_j); zero if any b_j > a_j.
inline Int mi_binomial(const MIdx& a, const MIdx& b) {
    Int r(1);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (b[j] > a[j]) return Int(0);
        r *= binomial(a[j], b[j]);
    }
    return r;
}

// Degree first, then lexicographic. The canonical order everywhere.
inline bool mi_graded_lex_less(const MIdx& a, const MIdx& b) {
    uint32_t da = mi_degree(a), db = mi_degree(b);
    if (da != db) return da < db;
    return a < b;
}

// All multi-indices of length n with degree exactly d, graded-lex order.
std::vector<MIdx> mi_all_of_degree(std::size_t n, uint32_t d);
// All multi-indices of length n with degree <= N, graded-lex order.
std::vector<MIdx> mi_all_up_to(std::size_t n, uint32_t N);

} // namespace hh
