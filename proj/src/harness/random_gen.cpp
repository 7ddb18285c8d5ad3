#include "hh/random_gen.hpp"

#include "hh/errors.hpp"

namespace hh {

long RandomGen::next_int(long lo, long hi) {
    if (lo > hi) throw domain_error("RandomGen::next_int: empty range");
    uint64_t span = (uint64_t)(hi - lo) + 1;
    return lo + (long)(rng_() % span);
}

Rat RandomGen::next_rat(long max_num, long max_den) {
    long num = next_int(-max_num, max_num);
    if (num == 0) num = 1;
    long den = next_int(1, max_den);
    return make_rat(num, den);
}

CRat RandomGen::next_crat(long max_num, long max_den) {
    // either component may be zero, but not both
    long re = next_int(-max_num, max_num);
    long im = next_int(-max_num, max_num);
    if (re == 0 && im == 0) re = 1;
    return CRat(make_rat(re, next_int(1, max_den)),
                make_rat(im, next_int(1, max_den)));
}

PiScalar RandomGen::next_pi_scalar(int max_exp) {
    PiScalar s = PiScalar::pi_pow((int)next_int(-max_exp, max_exp), next_crat());
    if (next_int(0, 1) == 1)
        s += PiScalar::pi_pow((int)next_int(-max_exp, max_exp), next_crat());
    return s;
}

MIdx RandomGen::next_midx(int n, uint32_t max_per) {
    MIdx m((std::size_t)n, 0);
    for (auto& v : m) v = (uint32_t)next_int(0, (long)max_per);
    return m;
}

GaussPoly RandomGen::next_gauss_poly(const WeylContext& ctx, const Rat& t,
                                     int terms, uint32_t max_per) {
    GaussPoly f(ctx, t);
    for (int i = 0; i < terms; ++i)
        f.add_term(next_midx(ctx.n, max_per), next_midx(ctx.n, max_per),
                   next_pi_scalar());
    return f;
}

CMatrix RandomGen::next_phase_permutation(int n) {
    std::vector<std::size_t> perm((std::size_t)n);
    for (int i = 0; i < n; ++i) perm[(std::size_t)i] = (std::size_t)i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[(std::size_t)i], perm[(std::size_t)next_int(0, i)]);
    CMatrix U((std::size_t)n, std::vector<CRat>((std::size_t)n, CRat()));
    for (int j = 0; j < n; ++j) {
        long phase = next_int(0, 3); // i^phase
        CRat v;
        switch (phase) {
        case 0: v = CRat(Rat(1)); break;
        case 1: v = CRat::unit_i(); break;
        case 2: v = CRat(Rat(-1)); break;
        default: v = -CRat::unit_i(); break;
        }
        U[perm[(std::size_t)j]][(std::size_t)j] = v;
    }
    return U;
}

OperatorMatrix RandomGen::next_on_slice(const FockPtr& fock,
                                        const std::vector<std::size_t>& slice) {
    OperatorMatrix S(fock);
    for (std::size_t mu : slice)
        for (std::size_t nu : slice)
            S.at(mu, nu) = PiScalar::from(next_crat());
    return S;
}

} // namespace hh
