#include "hh/hecke.hpp"

#include <algorithm>
#include <utility>

#include "hh/errors.hpp"
#include "hh/laguerre.hpp"

namespace hh {

GaussPoly polynomial_part(const GaussPoly& f) {
    GaussPoly out = GaussPoly::zero(f.context(), Rat(0));
    for (const auto& [key, c] : f.terms()) out.add_term(key.a, key.b, c);
    return out;
}

namespace {

// Infinitesimal rotation E_{jk} = z_j d/dz_k - zbar_k d/dzbar_j on a bare
// polynomial.
GaussPoly rotation_action(const GaussPoly& g, int j, int k) {
    return g.dz(k).mul_z(j) - g.dzbar(j).mul_zbar(k);
}

bool invariant_on_block(const GaussPoly& gpoly, int lo, int hi) {
    for (int j = lo; j < hi; ++j)
        for (int k = lo; k < hi; ++k)
            if (!rotation_action(gpoly, j, k).is_zero()) return false;
    return true;
}

GaussPoly block_laplacian(const GaussPoly& f, int lo, int hi) {
    GaussPoly acc = GaussPoly::zero(f.context(), f.gauss_t());
    for (int j = lo; j < hi; ++j) acc += f.dz(j).dzbar(j);
    return acc;
}

Rat factorial_ratio(unsigned n_block, unsigned m, unsigned pp, unsigned qq) {
    Rat r(factorial(n_block - 1) * factorial(m - pp));
    r /= Rat(factorial(m + n_block + qq - 1));
    return r;
}

} // namespace

bool is_invariant(const GaussPoly& g, const Family& fam) {
    GaussPoly gp = polynomial_part(g);
    const WeylContext& ctx = g.context();
    if (fam.kind == Family::product) {
        fam.check_against(ctx);
        return invariant_on_block(gp, 0, fam.n1) &&
               invariant_on_block(gp, fam.n1, ctx.n);
    }
    return invariant_on_block(gp, 0, ctx.n);
}

std::vector<HeckeCoefficient> hecke_bochner(const GaussPoly& P,
                                            const GaussPoly& g, unsigned kmax) {
    const WeylContext& ctx = P.context();
    if (g.gauss_t() <= 0)
        throw domain_error("hecke_bochner: g must have positive Gaussian decay");
    auto [p, q] = bidegree(P, 0, ctx.n);
    if (!block_laplacian(P, 0, ctx.n).is_zero())
        throw domain_error("hecke_bochner: P is not harmonic");
    if (!is_invariant(g, Family::un()))
        throw domain_error("hecke_bochner: g is not invariant");
    unsigned pp = p, qq = q;
    if (ctx.lambda < 0) std::swap(pp, qq);

    GaussPoly upsilon = radial_power(ctx, p + q, 0, ctx.n);
    std::vector<HeckeCoefficient> out;
    out.reserve(kmax + 1);
    for (unsigned k = 0; k <= kmax; ++k) {
        HeckeCoefficient rec;
        rec.k = k;
        if (pp > k) {
            rec.C = PiScalar::zero();
            rec.c_closed = PiScalar::zero();
            out.push_back(rec);
            continue;
        }
        GaussPoly fac = spherical_radial_factor(ctx, p, q, k);
        PiScalar num = integrate(
            (fac.conj() * upsilon * g).times_gauss(ctx.abs_lambda()));
        rec.C = num.divide_exact(spherical_norm_scalar(ctx, p, q, k));

        GaussPoly lag =
            laguerre_radial(ctx, k - pp, Rat(unsigned(ctx.n) + p + q - 1),
                            ctx.two_abs_lambda(), 0, ctx.n);
        PiScalar raw =
            integrate((lag * upsilon * g).times_gauss(ctx.abs_lambda()));
        Rat ratio = factorial_ratio(unsigned(ctx.n), k, pp, qq);
        if (q % 2 == 1) ratio = -ratio;
        rec.c_closed = raw.scale(CRat(ratio));
        out.push_back(rec);
    }
    return out;
}

std::vector<HeckeCoefficientProduct> hecke_bochner_product(
    const GaussPoly& P, const GaussPoly& g, const Family& fam, unsigned m1max,
    unsigned m2max) {
    const WeylContext& ctx = P.context();
    if (fam.kind != Family::product)
        throw domain_error("hecke_bochner_product: family is not a product");
    fam.check_against(ctx);
    if (g.gauss_t() <= 0)
        throw domain_error(
            "hecke_bochner_product: g must have positive Gaussian decay");
    auto [p1, q1] = bidegree(P, 0, fam.n1);
    auto [p2, q2] = bidegree(P, fam.n1, ctx.n);
    if (!block_laplacian(P, 0, fam.n1).is_zero() ||
        !block_laplacian(P, fam.n1, ctx.n).is_zero())
        throw domain_error("hecke_bochner_product: P is not block-harmonic");
    if (!is_invariant(g, fam))
        throw domain_error("hecke_bochner_product: g is not invariant");
    unsigned pp1 = p1, qq1 = q1, pp2 = p2, qq2 = q2;
    if (ctx.lambda < 0) {
        std::swap(pp1, qq1);
        std::swap(pp2, qq2);
    }

    GaussPoly upsilon = radial_power(ctx, p1 + q1, 0, fam.n1) *
                        radial_power(ctx, p2 + q2, fam.n1, ctx.n);
    std::vector<HeckeCoefficientProduct> out;
    out.reserve(std::size_t(m1max + 1) * (m2max + 1));
    for (unsigned m1 = 0; m1 <= m1max; ++m1) {
        for (unsigned m2 = 0; m2 <= m2max; ++m2) {
            HeckeCoefficientProduct rec;
            rec.m1 = m1;
            rec.m2 = m2;
            if (pp1 > m1 || pp2 > m2) {
                rec.C = PiScalar::zero();
                rec.c_closed = PiScalar::zero();
                out.push_back(rec);
                continue;
            }
            GaussPoly fac = spherical_radial_factor_product(ctx, fam, m1, m2,
                                                            p1, q1, p2, q2);
            PiScalar num = integrate(
                (fac.conj() * upsilon * g).times_gauss(ctx.abs_lambda()));
            rec.C = num.divide_exact(spherical_norm_scalar_product(
                ctx, fam, m1, m2, p1, q1, p2, q2));

            GaussPoly lag =
                laguerre_radial(ctx, m1 - pp1,
                                Rat(unsigned(fam.n1) + p1 + q1 - 1),
                                ctx.two_abs_lambda(), 0, fam.n1) *
                laguerre_radial(ctx, m2 - pp2,
                                Rat(unsigned(fam.n2) + p2 + q2 - 1),
                                ctx.two_abs_lambda(), fam.n1, ctx.n);
            PiScalar raw =
                integrate((lag * upsilon * g).times_gauss(ctx.abs_lambda()));
            Rat ratio = factorial_ratio(unsigned(fam.n1), m1, pp1, qq1) *
                        factorial_ratio(unsigned(fam.n2), m2, pp2, qq2);
            if ((q1 + q2) % 2 == 1) ratio = -ratio;
            rec.c_closed = raw.scale(CRat(ratio));
            out.push_back(rec);
        }
    }
    return out;
}

bool hecke_identity_holds(const GaussPoly& P, const GaussPoly& g, unsigned k,
                          const PiScalar& C) {
    GaussPoly F = P * g;
    GaussPoly lhs = twisted_convolve(F, bounded_spherical(P.context(), k));
    GaussPoly rhs = generalized_spherical(P, k);
    rhs.scale(C);
    return lhs == rhs;
}

bool hecke_identity_holds_product(const GaussPoly& P, const GaussPoly& g,
                                  const Family& fam, unsigned m1, unsigned m2,
                                  const PiScalar& C) {
    GaussPoly F = P * g;
    GaussPoly lhs = twisted_convolve(
        F, bounded_spherical_product(P.context(), fam, m1, m2));
    GaussPoly rhs = generalized_spherical_product(P, fam, m1, m2);
    rhs.scale(C);
    return lhs == rhs;
}

PiScalar column_pairing(const HarmonicColumn& col, unsigned ka, unsigned kb) {
    PiScalar acc = PiScalar::zero();
    for (std::size_t j = 0; j < col.basis.size(); ++j) {
        GaussPoly a = generalized_spherical(col.basis[j], ka);
        GaussPoly b = generalized_spherical(col.basis[j], kb);
        if (a.is_zero() || b.is_zero()) continue;
        acc += PiScalar::from_rat(col.weights[j]) * l2_inner(a, b);
    }
    return acc;
}

PiScalar column_pairing_product(const HarmonicColumn& col, const Family& fam,
                                unsigned m1a, unsigned m2a, unsigned m1b,
                                unsigned m2b) {
    PiScalar acc = PiScalar::zero();
    for (std::size_t j = 0; j < col.basis.size(); ++j) {
        GaussPoly a =
            generalized_spherical_product(col.basis[j], fam, m1a, m2a);
        GaussPoly b =
            generalized_spherical_product(col.basis[j], fam, m1b, m2b);
        if (a.is_zero() || b.is_zero()) continue;
        acc += PiScalar::from_rat(col.weights[j]) * l2_inner(a, b);
    }
    return acc;
}

namespace {

GaussPoly eigenfunction_on_slice(const OperatorMatrix& S,
                                 const std::vector<std::size_t>& slice,
                                 const char* caller) {
    const FockTruncation& fock = S.fock();
    std::vector<bool> in_slice(fock.dim(), false);
    for (std::size_t i : slice) in_slice[i] = true;
    for (std::size_t mu = 0; mu < fock.dim(); ++mu)
        for (std::size_t nu = 0; nu < fock.dim(); ++nu)
            if (!S.at(mu, nu).is_zero() && (!in_slice[mu] || !in_slice[nu]))
                throw domain_error(std::string(caller) +
                                   ": operator support off the eigenspace");
    return eigenfunction_from_operator(S, slice);
}

} // namespace

GaussPoly eigenfunction_from_band(const OperatorMatrix& S, uint32_t k) {
    return eigenfunction_on_slice(S, S.fock().degree_slice(k),
                                  "eigenfunction_from_band");
}

GaussPoly eigenfunction_from_block(const OperatorMatrix& S, const Family& fam,
                                   uint32_t m1, uint32_t m2) {
    return eigenfunction_on_slice(S, S.fock().block_slice(fam, m1, m2),
                                  "eigenfunction_from_block");
}

} // namespace hh
