#include "hh/spherical.hpp"

#include <algorithm>

#include "hh/errors.hpp"

namespace hh {

namespace {

unsigned range_degree(const MIdx& a, int lo, int hi) {
    unsigned s = 0;
    for (int j = lo; j < hi; ++j) s += a[std::size_t(j)];
    return s;
}

// Overall scalar pi^{-n} * sign * (2|lambda|)^e.
PiScalar radial_prefactor(const WeylContext& ctx, int sign, long e) {
    Rat c = rat_pow(ctx.two_abs_lambda(), e);
    if (sign < 0) c = -c;
    return PiScalar::pi_pow(-ctx.n, CRat(c));
}

} // namespace

GaussPoly bounded_spherical(const WeylContext& ctx, unsigned k) {
    GaussPoly lag = laguerre_radial(ctx, k, Rat(unsigned(ctx.n) - 1),
                                    ctx.two_abs_lambda(), 0, ctx.n);
    return lag.times_gauss(ctx.abs_lambda())
        .scale(radial_prefactor(ctx, +1, ctx.n));
}

GaussPoly bounded_spherical_product(const WeylContext& ctx, const Family& fam,
                                    unsigned m1, unsigned m2) {
    if (fam.kind != Family::product)
        throw domain_error("bounded_spherical_product: family is not a product");
    fam.check_against(ctx);
    GaussPoly lag1 = laguerre_radial(ctx, m1, Rat(unsigned(fam.n1) - 1),
                                     ctx.two_abs_lambda(), 0, fam.n1);
    GaussPoly lag2 = laguerre_radial(ctx, m2, Rat(unsigned(fam.n2) - 1),
                                     ctx.two_abs_lambda(), fam.n1, ctx.n);
    return (lag1 * lag2)
        .times_gauss(ctx.abs_lambda())
        .scale(radial_prefactor(ctx, +1, ctx.n));
}

InvariantOp special_hermite_op(const WeylContext& ctx) {
    InvariantOp op;
    for (int j = 0; j < ctx.n; ++j) {
        op.add(PiScalar::one(), OpWord{{OpFactor::L, j}, {OpFactor::Lbar, j}});
        op.add(PiScalar::one(), OpWord{{OpFactor::Lbar, j}, {OpFactor::L, j}});
    }
    return op;
}

PiScalar special_hermite_eigenvalue(const WeylContext& ctx, unsigned k) {
    Rat v = -ctx.two_abs_lambda() * Rat(2 * k + unsigned(ctx.n));
    return PiScalar::from_rat(v);
}

namespace {

std::pair<int, int> block_range(const WeylContext& ctx, const Family& fam,
                                int block) {
    if (fam.kind != Family::product)
        throw domain_error("block_range: family is not a product");
    fam.check_against(ctx);
    if (block == 1) return {0, fam.n1};
    if (block == 2) return {fam.n1, ctx.n};
    throw domain_error("block_range: block must be 1 or 2");
}

} // namespace

InvariantOp special_hermite_op_block(const WeylContext& ctx, const Family& fam,
                                     int block) {
    auto [lo, hi] = block_range(ctx, fam, block);
    InvariantOp op;
    for (int j = lo; j < hi; ++j) {
        op.add(PiScalar::one(), OpWord{{OpFactor::L, j}, {OpFactor::Lbar, j}});
        op.add(PiScalar::one(), OpWord{{OpFactor::Lbar, j}, {OpFactor::L, j}});
    }
    return op;
}

PiScalar special_hermite_eigenvalue_block(const WeylContext& ctx,
                                          const Family& fam, int block,
                                          unsigned m) {
    auto [lo, hi] = block_range(ctx, fam, block);
    Rat v = -ctx.two_abs_lambda() * Rat(2 * m + unsigned(hi - lo));
    return PiScalar::from_rat(v);
}

std::pair<unsigned, unsigned> bidegree(const GaussPoly& P, int lo, int hi) {
    if (!P.is_polynomial())
        throw domain_error("bidegree: expected a bare polynomial");
    if (P.is_zero()) throw domain_error("bidegree: zero polynomial");
    bool first = true;
    unsigned p = 0, q = 0;
    for (const auto& [key, c] : P.terms()) {
        (void)c;
        unsigned dp = range_degree(key.a, lo, hi);
        unsigned dq = range_degree(key.b, lo, hi);
        if (first) {
            p = dp;
            q = dq;
            first = false;
        } else if (dp != p || dq != q) {
            throw domain_error("bidegree: polynomial mixes bidegrees");
        }
    }
    return {p, q};
}

GaussPoly spherical_radial_factor(const WeylContext& ctx, unsigned p,
                                  unsigned q, unsigned k) {
    unsigned pp = p, qq = q;
    if (ctx.lambda < 0) std::swap(pp, qq);
    if (pp > k) return GaussPoly::zero(ctx, Rat(0));
    GaussPoly lag =
        laguerre_radial(ctx, k - pp, Rat(unsigned(ctx.n) + p + q - 1),
                        ctx.two_abs_lambda(), 0, ctx.n);
    // The sign is (-1)^q for either sign of lambda; only the Laguerre index
    // threshold and the norm constant swap the roles of p and q.
    int sign = (q % 2 == 0) ? +1 : -1;
    return lag.scale(radial_prefactor(ctx, sign, long(ctx.n) + p + q));
}

GaussPoly spherical_radial_factor_product(const WeylContext& ctx,
                                          const Family& fam, unsigned m1,
                                          unsigned m2, unsigned p1, unsigned q1,
                                          unsigned p2, unsigned q2) {
    if (fam.kind != Family::product)
        throw domain_error(
            "spherical_radial_factor_product: family is not a product");
    fam.check_against(ctx);
    unsigned pp1 = p1, qq1 = q1, pp2 = p2, qq2 = q2;
    if (ctx.lambda < 0) {
        std::swap(pp1, qq1);
        std::swap(pp2, qq2);
    }
    if (pp1 > m1 || pp2 > m2) return GaussPoly::zero(ctx, Rat(0));
    GaussPoly lag1 =
        laguerre_radial(ctx, m1 - pp1, Rat(unsigned(fam.n1) + p1 + q1 - 1),
                        ctx.two_abs_lambda(), 0, fam.n1);
    GaussPoly lag2 =
        laguerre_radial(ctx, m2 - pp2, Rat(unsigned(fam.n2) + p2 + q2 - 1),
                        ctx.two_abs_lambda(), fam.n1, ctx.n);
    int sign = ((q1 + q2) % 2 == 0) ? +1 : -1;
    return (lag1 * lag2)
        .scale(radial_prefactor(ctx, sign,
                                long(ctx.n) + p1 + q1 + p2 + q2));
}

GaussPoly generalized_spherical(const GaussPoly& P, unsigned k) {
    const WeylContext& ctx = P.context();
    auto [p, q] = bidegree(P, 0, ctx.n);
    GaussPoly fac = spherical_radial_factor(ctx, p, q, k);
    if (fac.is_zero()) return GaussPoly::zero(ctx, ctx.abs_lambda());
    return (P * fac).times_gauss(ctx.abs_lambda());
}

GaussPoly generalized_spherical_product(const GaussPoly& P, const Family& fam,
                                        unsigned m1, unsigned m2) {
    const WeylContext& ctx = P.context();
    auto [p1, q1] = bidegree(P, 0, fam.n1);
    auto [p2, q2] = bidegree(P, fam.n1, ctx.n);
    GaussPoly fac =
        spherical_radial_factor_product(ctx, fam, m1, m2, p1, q1, p2, q2);
    if (fac.is_zero()) return GaussPoly::zero(ctx, ctx.abs_lambda());
    return (P * fac).times_gauss(ctx.abs_lambda());
}

PiScalar spherical_norm_scalar(const WeylContext& ctx, unsigned p, unsigned q,
                               unsigned k) {
    unsigned pp = p, qq = q;
    if (ctx.lambda < 0) std::swap(pp, qq);
    if (pp > k) return PiScalar::zero();
    Rat ratio(factorial(k + unsigned(ctx.n) + qq - 1));
    ratio /= Rat(factorial(unsigned(ctx.n) - 1) * factorial(k - pp));
    Rat c = rat_pow(ctx.two_abs_lambda(), long(ctx.n) + p + q) * ratio;
    return PiScalar::pi_pow(-ctx.n, CRat(c));
}

PiScalar spherical_norm_scalar_product(const WeylContext& ctx,
                                       const Family& fam, unsigned m1,
                                       unsigned m2, unsigned p1, unsigned q1,
                                       unsigned p2, unsigned q2) {
    if (fam.kind != Family::product)
        throw domain_error(
            "spherical_norm_scalar_product: family is not a product");
    fam.check_against(ctx);
    unsigned pp1 = p1, qq1 = q1, pp2 = p2, qq2 = q2;
    if (ctx.lambda < 0) {
        std::swap(pp1, qq1);
        std::swap(pp2, qq2);
    }
    if (pp1 > m1 || pp2 > m2) return PiScalar::zero();
    Rat ratio(factorial(m1 + unsigned(fam.n1) + qq1 - 1));
    ratio /= Rat(factorial(unsigned(fam.n1) - 1) * factorial(m1 - pp1));
    ratio *= Rat(factorial(m2 + unsigned(fam.n2) + qq2 - 1));
    ratio /= Rat(factorial(unsigned(fam.n2) - 1) * factorial(m2 - pp2));
    Rat c = rat_pow(ctx.two_abs_lambda(),
                    long(ctx.n) + p1 + q1 + p2 + q2) *
            ratio;
    return PiScalar::pi_pow(-ctx.n, CRat(c));
}

std::vector<GaussPoly> spherical_components(const GaussPoly& f, unsigned kmax) {
    const WeylContext& ctx = f.context();
    std::vector<GaussPoly> out;
    out.reserve(kmax + 1);
    for (unsigned k = 0; k <= kmax; ++k)
        out.push_back(twisted_convolve(f, bounded_spherical(ctx, k)));
    return out;
}

GaussPoly spherical_expansion_sum(const GaussPoly& f, unsigned kmax) {
    std::vector<GaussPoly> parts = spherical_components(f, kmax);
    GaussPoly acc = GaussPoly::zero(f.context(), f.gauss_t());
    for (const GaussPoly& g : parts) acc += g;
    return acc;
}

} // namespace hh
