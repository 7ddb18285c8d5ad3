#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hh/fock.hpp"
#include "hh/gauss_poly.hpp"

namespace hh {

// Seeded generator of small exact objects for randomized identity checks.
// Draws map mt19937_64 output through explicit modular arithmetic (never
// std::uniform_int_distribution, whose mapping is implementation-defined),
// so a fixed seed yields the same stream on every platform.
class RandomGen {
  public:
    explicit RandomGen(uint64_t seed) : rng_(seed) {}

    uint64_t next_u64() { return rng_(); }
    // Uniform integer in [lo, hi] (inclusive); requires lo <= hi.
    long next_int(long lo, long hi);

    // Nonzero small rational with |numerator| <= max_num, denominator
    // in [1, max_den].
    Rat next_rat(long max_num = 4, long max_den = 4);
    CRat next_crat(long max_num = 4, long max_den = 4);
    // 1-2 terms c * pi^e with |e| <= max_exp.
    PiScalar next_pi_scalar(int max_exp = 1);

    MIdx next_midx(int n, uint32_t max_per = 2);

    // Sparse exact function sum c_i z^{a_i} zbar^{b_i} e^{-t|z|^2} with the
    // requested number of draws (coefficient collisions may merge terms).
    GaussPoly next_gauss_poly(const WeylContext& ctx, const Rat& t,
                              int terms = 4, uint32_t max_per = 2);

    // Unitary with entries in {0, +-1, +-i}: a permutation matrix with
    // fourth-root-of-unity phases (the class on which equivariance holds in
    // exact arithmetic).
    CMatrix next_phase_permutation(int n);

    // Matrix with random CRat entries on the given index set (rows and
    // columns both restricted to `slice`; all other entries zero).
    OperatorMatrix next_on_slice(const FockPtr& fock,
                                 const std::vector<std::size_t>& slice);

  private:
    std::mt19937_64 rng_;
};

} // namespace hh
