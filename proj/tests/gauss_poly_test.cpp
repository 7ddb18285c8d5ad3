#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hh/gauss_poly.hpp"
#include "hh/laguerre.hpp"
#include "hh/serialize.hpp"
#include "test_util.hpp"

using namespace hh;
using hhtest::make_rng;
using hhtest::random_gauss_poly;
using hhtest::random_pi_scalar;

namespace {

GaussPoly mono(const WeylContext& ctx, MIdx a, MIdx b, Rat t) {
    return GaussPoly::monomial(ctx, std::move(t), std::move(a), std::move(b), PiScalar::one());
}

GaussPoly constpoly(const WeylContext& ctx, PiScalar c, Rat t) {
    return GaussPoly::constant(ctx, std::move(t), std::move(c));
}

GaussPoly ground_state(const WeylContext& ctx) {
    // (2|lambda|/pi)^n exp(-|lambda| |z|^2): the unit element for the twisted product.
    PiScalar c = PiScalar::pi_pow(-ctx.n, CRat(rat_pow(ctx.two_abs_lambda(), ctx.n)));
    GaussPoly f(ctx, ctx.abs_lambda());
    f.add_term(mi_zero(ctx.n), mi_zero(ctx.n), c);
    return f;
}

} // namespace

TEST_CASE("polynomial algebra matches hand expansion") {
    WeylContext ctx(2, make_rat(1));
    GaussPoly z1 = mono(ctx, mi_unit(2, 0), mi_zero(2), make_rat(0));
    GaussPoly zb2 = mono(ctx, mi_zero(2), mi_unit(2, 1), make_rat(0));
    GaussPoly prod = (z1 + zb2) * (z1 - zb2);
    // z1^2 - zbar2^2, cross terms cancel.
    CHECK(prod.terms().size() == 2);
    CHECK(prod.coeff(MIdx{2, 0}, MIdx{0, 0}) == PiScalar::one());
    CHECK(prod.coeff(MIdx{0, 0}, MIdx{0, 2}) == -PiScalar::one());

    GaussPoly sq = z1 * z1 * z1;
    CHECK(sq.coeff(MIdx{3, 0}, MIdx{0, 0}) == PiScalar::one());
}

TEST_CASE("conjugation and reflection are involutions compatible with products") {
    auto rng = make_rng(21);
    WeylContext ctx(2, make_rat(-3, 2));
    for (int round = 0; round < 25; ++round) {
        GaussPoly f = random_gauss_poly(rng, ctx, make_rat(1), 3);
        GaussPoly g = random_gauss_poly(rng, ctx, make_rat(2), 3);
        CHECK(f.conj().conj() == f);
        CHECK(f.reflect().reflect() == f);
        CHECK((f * g).conj() == f.conj() * g.conj());
        CHECK((f * g).reflect() == f.reflect() * g.reflect());
    }
}

TEST_CASE("derivatives satisfy the Leibniz rule and act on the gaussian factor") {
    auto rng = make_rng(22);
    WeylContext ctx(2, make_rat(1));
    for (int round = 0; round < 25; ++round) {
        GaussPoly f = random_gauss_poly(rng, ctx, make_rat(3, 2), 3);
        GaussPoly g = random_gauss_poly(rng, ctx, make_rat(3, 2), 3);
        GaussPoly fg = f * g; // gauss_t = 3
        for (int j = 0; j < 2; ++j) {
            CHECK(fg.dz(j) == f.dz(j) * g + f * g.dz(j));
            CHECK(fg.dzbar(j) == f.dzbar(j) * g + f * g.dzbar(j));
        }
    }
    // d/dz_j exp(-t|z|^2) = -t zbar_j exp(-t|z|^2)
    GaussPoly gauss = constpoly(WeylContext(1, make_rat(1)), PiScalar::one(), make_rat(5, 3));
    GaussPoly expect = gauss.mul_zbar(0).scale(PiScalar::from_rat(make_rat(-5, 3)));
    CHECK(gauss.dz(0) == expect);
}

TEST_CASE("gaussian moment integrals take closed-form exact values") {
    WeylContext c1(1, make_rat(1));
    // |z|^2 exp(-2|z|^2) over the complex plane integrates to pi/4.
    GaussPoly f = mono(c1, MIdx{1}, MIdx{1}, make_rat(2));
    CHECK(integrate(f) == PiScalar::pi_pow(1, CRat(make_rat(1, 4))));

    // Pure gaussian: pi^n / t^n.
    WeylContext c2(2, make_rat(1));
    GaussPoly g = constpoly(c2, PiScalar::one(), make_rat(3));
    CHECK(integrate(g) == PiScalar::pi_pow(2, CRat(make_rat(1, 9))));

    // Unbalanced holomorphic/antiholomorphic powers integrate to zero.
    GaussPoly h = mono(c2, MIdx{2, 0}, MIdx{1, 0}, make_rat(1));
    CHECK(integrate(h).is_zero());

    // No gaussian decay: divergent.
    GaussPoly bare = mono(c1, MIdx{0}, MIdx{0}, make_rat(0));
    CHECK_THROWS_AS(integrate(bare), domain_error);
}

TEST_CASE("integration kills total derivatives and commutes with conjugation") {
    auto rng = make_rng(23);
    WeylContext ctx(2, make_rat(2));
    for (int round = 0; round < 20; ++round) {
        GaussPoly f = random_gauss_poly(rng, ctx, make_rat(2), 4);
        for (int j = 0; j < 2; ++j) {
            CHECK(integrate(f.dz(j)).is_zero());
            CHECK(integrate(f.dzbar(j)).is_zero());
        }
        CHECK(integrate(f.conj()) == integrate(f).conj());
    }
}

TEST_CASE("left and right invariant operators satisfy the structure relations") {
    auto rng = make_rng(24);
    for (const Rat& lam : {make_rat(1), make_rat(-1), make_rat(3, 4)}) {
        WeylContext ctx(2, lam);
        PiScalar two_lam = PiScalar::from_rat(lam * 2);
        for (int round = 0; round < 10; ++round) {
            GaussPoly f = random_gauss_poly(rng, ctx, make_rat(1), 3);
            for (int j = 0; j < 2; ++j) {
                for (int k = 0; k < 2; ++k) {
                    PiScalar delta = (j == k) ? two_lam : PiScalar::zero();
                    // [Lbar_j, L_k] = -2 delta_{jk} lambda
                    GaussPoly lhs = op_Lbar(op_L(f, k), j) - op_L(op_Lbar(f, j), k);
                    CHECK(lhs == f.scale(-delta));
                    // [Rbar_j, R_k] = +2 delta_{jk} lambda
                    GaussPoly rhs = op_Rbar(op_R(f, k), j) - op_R(op_Rbar(f, j), k);
                    CHECK(rhs == f.scale(delta));
                    // Left family commutes with right family.
                    GaussPoly mix = op_L(op_R(f, k), j) - op_R(op_L(f, j), k);
                    CHECK(mix.is_zero());
                    GaussPoly mix2 = op_Lbar(op_Rbar(f, k), j) - op_Rbar(op_Lbar(f, j), k);
                    CHECK(mix2.is_zero());
                }
            }
        }
    }
}

TEST_CASE("operator words compose left-to-right with leftmost applied last") {
    WeylContext ctx(1, make_rat(1));
    GaussPoly f = mono(ctx, MIdx{1}, MIdx{0}, make_rat(1));
    OpWord w{{OpFactor{OpFactor::Kind::dz, 0}, OpFactor{OpFactor::Kind::mz, 0}}};
    // (d/dz ∘ mult_z) z e^{-|z|^2} = d/dz (z^2 e^{-|z|^2}) = 2z e - z^2 zbar e
    GaussPoly got = apply_word(f, w);
    CHECK(got.coeff(MIdx{1}, MIdx{0}) == PiScalar::from_int(2));
    CHECK(got.coeff(MIdx{2}, MIdx{1}) == -PiScalar::one());

    InvariantOp a = InvariantOp::word(OpWord{OpFactor{OpFactor::Kind::L, 0}});
    InvariantOp b = InvariantOp::word(OpWord{OpFactor{OpFactor::Kind::Lbar, 0}});
    CHECK((a * b).apply(f) == a.apply(b.apply(f)));
}

TEST_CASE("theta halves agree on harmonic arguments and differ otherwise") {
    auto rng = make_rng(25);
    WeylContext ctx(2, make_rat(1));
    GaussPoly harm = mono(ctx, mi_unit(2, 0), mi_unit(2, 1), make_rat(0)); // z1 zbar2
    GaussPoly f = random_gauss_poly(rng, ctx, make_rat(1), 4);
    CHECK(theta1(harm, f) == theta2(harm, f));
    CHECK(theta(harm, f) == theta1(harm, f));

    GaussPoly nonharm = mono(ctx, mi_unit(2, 0), mi_unit(2, 0), make_rat(0)); // |z1|^2
    GaussPoly ground = ground_state(ctx);
    CHECK(theta1(nonharm, ground) != theta2(nonharm, ground));
}

TEST_CASE("twisted product has the laguerre ground state as idempotent unit") {
    for (const Rat& lam : {make_rat(1), make_rat(-1), make_rat(1, 2)}) {
        WeylContext ctx(1, lam);
        GaussPoly psi0 = ground_state(ctx);
        CHECK(twisted_convolve(psi0, psi0) == psi0);
    }
    WeylContext c2(2, make_rat(2));
    GaussPoly psi0 = ground_state(c2);
    CHECK(twisted_convolve(psi0, psi0) == psi0);
}

TEST_CASE("twisted product is bilinear and context-checked") {
    auto rng = make_rng(26);
    WeylContext ctx(1, make_rat(1));
    GaussPoly f = random_gauss_poly(rng, ctx, make_rat(1), 3, 2);
    GaussPoly g = random_gauss_poly(rng, ctx, make_rat(1), 3, 2);
    GaussPoly h = random_gauss_poly(rng, ctx, make_rat(1), 3, 2);
    CHECK(twisted_convolve(f + g, h) == twisted_convolve(f, h) + twisted_convolve(g, h));
    CHECK(twisted_convolve(f, g + h) == twisted_convolve(f, g) + twisted_convolve(f, h));

    GaussPoly wrong_t = random_gauss_poly(rng, ctx, make_rat(2), 2, 1);
    CHECK_THROWS_AS(twisted_convolve(f, wrong_t), domain_error);
    WeylContext other(1, make_rat(2));
    GaussPoly other_f = random_gauss_poly(rng, other, make_rat(2), 2, 1);
    CHECK_THROWS_AS(twisted_convolve(f, other_f), context_error);
}

TEST_CASE("evaluation returns floating values at sample points") {
    WeylContext ctx(1, make_rat(1));
    GaussPoly psi0 = ground_state(ctx);
    std::vector<std::complex<double>> origin{{0.0, 0.0}};
    double val = psi0.evaluate(origin).real();
    CHECK(std::abs(val - 0.6366197723675814) < 1e-14); // 2/pi

    std::vector<std::complex<double>> pt{{0.5, -0.25}};
    double expect = 2.0 / 3.14159265358979323846 * std::exp(-(0.25 + 0.0625));
    CHECK(std::abs(psi0.evaluate(pt).real() - expect) < 1e-14);
}

TEST_CASE("laguerre builders produce exact coefficient arrays") {
    // L_1^1(x) = 2 - x ; L_2^0(x) = 1 - 2x + x^2/2.
    auto c11 = laguerre_coeffs(1, 1);
    REQUIRE(c11.size() == 2);
    CHECK(c11[0] == make_rat(2));
    CHECK(c11[1] == make_rat(-1));
    auto c20 = laguerre_coeffs(2, 0);
    REQUIRE(c20.size() == 3);
    CHECK(c20[0] == make_rat(1));
    CHECK(c20[1] == make_rat(-2));
    CHECK(c20[2] == make_rat(1, 2));
    // L_k^a(0) = C(k+a, k).
    for (unsigned k = 0; k <= 5; ++k)
        for (unsigned a = 0; a <= 4; ++a)
            CHECK(laguerre_coeffs(k, a)[0] == Rat(binomial(k + a, k)));

    WeylContext ctx(2, make_rat(1));
    // L_1^1(2|z|^2) = 2 - 2|z1|^2 - 2|z2|^2 as a bare polynomial.
    GaussPoly lag = laguerre_radial(ctx, 1, 1, make_rat(2), 0, 2);
    CHECK(lag.coeff(MIdx{0, 0}, MIdx{0, 0}) == PiScalar::from_int(2));
    CHECK(lag.coeff(MIdx{1, 0}, MIdx{1, 0}) == PiScalar::from_int(-2));
    CHECK(lag.coeff(MIdx{0, 1}, MIdx{0, 1}) == PiScalar::from_int(-2));

    // (|z1|^2+|z2|^2)^2 expands with multinomial weights.
    GaussPoly r2 = radial_power(ctx, 2, 0, 2);
    CHECK(r2.coeff(MIdx{2, 0}, MIdx{2, 0}) == PiScalar::one());
    CHECK(r2.coeff(MIdx{1, 1}, MIdx{1, 1}) == PiScalar::from_int(2));
}

TEST_CASE("degree cap and context mixing raise typed errors") {
    WeylContext ctx(1, make_rat(1));
    GaussPoly big = mono(ctx, MIdx{33}, MIdx{0}, make_rat(0));
    CHECK_THROWS_AS(big * big, degree_error);

    WeylContext c2(2, make_rat(1));
    GaussPoly f1 = mono(ctx, MIdx{1}, MIdx{0}, make_rat(1));
    GaussPoly f2 = mono(c2, MIdx{1, 0}, MIdx{0, 0}, make_rat(1));
    CHECK_THROWS_AS(f1 + f2, context_error);

    WeylContext cneg(1, make_rat(-1));
    GaussPoly f3 = mono(cneg, MIdx{1}, MIdx{0}, make_rat(1));
    CHECK_THROWS_AS(f1 * f3, context_error);

    GaussPoly t1 = mono(ctx, MIdx{1}, MIdx{0}, make_rat(1));
    GaussPoly t2 = mono(ctx, MIdx{1}, MIdx{0}, make_rat(2));
    CHECK_THROWS_AS(t1 + t2, context_error);
    CHECK_NOTHROW(t1 * t2);

    CHECK_THROWS_AS(WeylContext(0, make_rat(1)), domain_error);
    CHECK_THROWS_AS(WeylContext(1, make_rat(0)), domain_error);
}

TEST_CASE("gauss-poly JSON round-trips exactly with graded term order") {
    auto rng = make_rng(27);
    WeylContext ctx(2, make_rat(-5, 3));
    for (int round = 0; round < 15; ++round) {
        GaussPoly f = random_gauss_poly(rng, ctx, make_rat(7, 2), 5);
        ojson j = gauss_poly_to_json(f);
        GaussPoly back = gauss_poly_from_json(j);
        CHECK(back == f);
        CHECK(gauss_poly_to_json(back).dump() == j.dump());
    }
    GaussPoly f(ctx, make_rat(1, 2));
    f.add_term(MIdx{2, 0}, MIdx{0, 0}, PiScalar::one());
    f.add_term(MIdx{0, 0}, MIdx{1, 0}, PiScalar::one());
    ojson j = gauss_poly_to_json(f);
    CHECK(j["n"] == 2);
    CHECK(j["lambda"] == "-5/3");
    CHECK(j["t"] == "1/2");
    // Graded order: total degree 1 term first.
    CHECK(j["terms"][0]["b"] == ojson::array({1, 0}));
    CHECK(j["terms"][1]["a"] == ojson::array({2, 0}));
}
