#pragma once

#include <random>

#include "hh/gauss_poly.hpp"

namespace hhtest {

using namespace hh;

inline std::mt19937_64 make_rng(uint64_t seed = 0x5eed5eedULL) {
    return std::mt19937_64(seed);
}

inline Rat random_small_rat(std::mt19937_64& rng, long max_abs = 6, long max_den = 4) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rat(num(rng), den(rng));
}

inline CRat random_crat(std::mt19937_64& rng) {
    return CRat(random_small_rat(rng), random_small_rat(rng));
}

inline PiScalar random_pi_scalar(std::mt19937_64& rng, int max_exp = 4) {
    std::uniform_int_distribution<int> nterms(1, 3);
    std::uniform_int_distribution<int> expd(-max_exp, max_exp);
    PiScalar s;
    int k = nterms(rng);
    for (int i = 0; i < k; ++i) s += PiScalar::pi_pow(expd(rng), random_crat(rng));
    return s;
}

inline MIdx random_midx(std::mt19937_64& rng, std::size_t n, uint32_t max_per) {
    std::uniform_int_distribution<uint32_t> d(0, max_per);
    MIdx m(n);
    for (auto& v : m) v = d(rng);
    return m;
}

// Sparse random exact function with the given gauss_t.
inline GaussPoly random_gauss_poly(std::mt19937_64& rng, const WeylContext& ctx,
                                   const Rat& t, int terms = 4,
                                   uint32_t max_per = 2) {
    GaussPoly f(ctx, t);
    for (int i = 0; i < terms; ++i)
        f.add_term(random_midx(rng, ctx.n, max_per), random_midx(rng, ctx.n, max_per),
                   random_pi_scalar(rng, 1));
    return f;
}

} // namespace hhtest
