#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hh/eta.hpp"
#include "hh/kernels.hpp"
#include "hh/spherical.hpp"

using namespace hh;
using cd = std::complex<double>;

namespace {

double pi_d() { return 3.14159265358979323846264338328; }

cd unit(double t) { return std::polar(1.0, t); }

} // namespace

TEST_CASE("bessel_j0 matches tabulated values") {
    // Reference values to 20 digits.
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(std::abs(bessel_j0(1.0) - 0.76519768655796655145) < 1e-14);
    CHECK(std::abs(bessel_j0(2.0) - 0.22389077914123566805) < 1e-14);
    CHECK(std::abs(bessel_j0(5.0) - (-0.17759677131433830435)) < 1e-13);
    CHECK(std::abs(bessel_j0(10.0) - (-0.24593576445134833520)) < 1e-12);
    CHECK(bessel_j0(-3.0) == bessel_j0(3.0));
}

TEST_CASE("hyp0f1 reduces to Bessel values") {
    // 0F1(;1;-x^2/4) = J_0(x)
    for (double x : {0.5, 1.0, 2.0, 4.0, 8.0})
        CHECK(std::abs(hyp0f1(1.0, -x * x / 4.0) - bessel_j0(x)) < 1e-13);
    // 0F1(;2;1) = I_1(2)
    CHECK(std::abs(hyp0f1(2.0, 1.0) - 1.59063685463732906338) < 1e-14);
    CHECK(hyp0f1(3.0, 0.0) == 1.0);
    CHECK_THROWS_AS(hyp0f1(0.0, 1.0), domain_error);
    CHECK_THROWS_AS(hyp0f1(-2.0, 1.0), domain_error);
}

TEST_CASE("eta_omega: full unitary family, one variable, equals J0") {
    Family fam = Family::un();
    for (double r : {0.0, 0.4, 1.1, 2.7}) {
        for (double s : {0.3, 1.9}) {
            std::vector<cd> omega{r * unit(0.7)};
            std::vector<cd> z{s * unit(-1.2)};
            cd v = eta_omega(fam, omega, z);
            CHECK(std::abs(v.imag()) < 1e-12);
            CHECK(std::abs(v.real() - bessel_j0(r * s)) < 1e-10);
        }
    }
}

TEST_CASE("eta_omega: invariance under phase rotation of either argument") {
    Family fam = Family::un();
    std::vector<cd> omega{cd(0.8, 0.3), cd(-0.2, 0.5)};
    std::vector<cd> z{cd(1.1, -0.4), cd(0.6, 0.9)};
    cd base = eta_omega(fam, omega, z);
    std::vector<cd> omega_rot = omega;
    for (auto& w : omega_rot) w *= unit(0.9);
    std::vector<cd> z_rot = z;
    for (auto& w : z_rot) w *= unit(-2.1);
    CHECK(std::abs(eta_omega(fam, omega_rot, z) - base) < 1e-10);
    CHECK(std::abs(eta_omega(fam, omega, z_rot) - base) < 1e-10);
}

TEST_CASE("eta_omega: full unitary family in two variables equals 0F1") {
    Family fam = Family::un();
    std::vector<cd> omega{cd(0.6, 0.2), cd(-0.3, 0.7)};
    std::vector<cd> z{cd(0.9, -0.1), cd(0.4, 0.5)};
    double c = 0.0, zz = 0.0;
    for (const cd& w : omega) c += std::norm(w);
    for (const cd& w : z) zz += std::norm(w);
    c = std::sqrt(c * zz);
    cd v = eta_omega(fam, omega, z);
    CHECK(std::abs(v - cd(hyp0f1(2.0, -c * c / 4.0), 0.0)) < 1e-9);
}

TEST_CASE("eta_omega: product family factors into block averages") {
    Family fam = Family::prod(1, 1);
    std::vector<cd> omega{cd(0.9, 0.0), cd(0.0, 1.3)};
    std::vector<cd> z{cd(0.0, 0.7), cd(1.1, 0.0)};
    cd v = eta_omega(fam, omega, z);
    double expect = bessel_j0(0.9 * 0.7) * bessel_j0(1.3 * 1.1);
    CHECK(std::abs(v - cd(expect, 0.0)) < 1e-10);

    // mixed block sizes: J0 times 0F1(2; .)
    Family fam2 = Family::prod(1, 2);
    std::vector<cd> omega2{cd(0.8, 0.1), cd(0.5, 0.0), cd(0.0, 0.6)};
    std::vector<cd> z2{cd(0.2, -0.9), cd(0.3, 0.4), cd(-0.5, 0.2)};
    double c1 = std::abs(omega2[0]) * std::abs(z2[0]);
    double c2 = std::sqrt((std::norm(omega2[1]) + std::norm(omega2[2])) *
                          (std::norm(z2[1]) + std::norm(z2[2])));
    cd v2 = eta_omega(fam2, omega2, z2);
    double expect2 = bessel_j0(c1) * hyp0f1(2.0, -c2 * c2 / 4.0);
    CHECK(std::abs(v2 - cd(expect2, 0.0)) < 1e-9);

    CHECK_THROWS_AS(eta_omega(fam2, omega, z), domain_error);
    CHECK_THROWS_AS(eta_omega(fam, std::vector<cd>{}, std::vector<cd>{}),
                    domain_error);
}

TEST_CASE("eta_omega at omega = 0 is one") {
    Family fam = Family::un();
    std::vector<cd> omega{cd(0, 0), cd(0, 0)};
    std::vector<cd> z{cd(1.2, 0.3), cd(-0.4, 0.8)};
    CHECK(std::abs(eta_omega(fam, omega, z) - cd(1.0, 0.0)) < 1e-12);
}

TEST_CASE("laguerre_gaussian_value: small closed forms") {
    WeylContext ctx{1, make_rat(1, 2)};
    // 2|lambda| = 1: L_1^0(t) e^{-t/2}
    CHECK(laguerre_gaussian_value(ctx, 1, 0, 1.0) == doctest::Approx(0.0));
    CHECK(std::abs(laguerre_gaussian_value(ctx, 1, 0, 3.0) -
                   (-0.44626032029685965787)) < 1e-14);
    CHECK(laguerre_gaussian_value(ctx, 0, 3, 0.0) == 1.0);
}

TEST_CASE("kernel_Q at the shifted center") {
    // At z = a * omega the Laguerre arguments vanish and the phase is zero:
    // the value is pi^{-n} (2|lambda|)^n prod_i binom(m_i + n_i - 1, m_i).
    WeylContext ctx{2, make_rat(1, 4)};
    Family fam = Family::prod(1, 1);
    std::vector<cd> omega{unit(0.4), unit(-1.7)};
    std::vector<cd> z = omega; // a = 1
    cd v = kernel_Q(ctx, fam, 0, 0, 1.0, 1.0, z, omega);
    CHECK(std::abs(v - cd(1.0 / (4.0 * pi_d() * pi_d()), 0.0)) < 1e-15);

    WeylContext ctx3{3, make_rat(1, 4)};
    Family fam3 = Family::prod(1, 2);
    std::vector<cd> omega3{unit(0.2), cd(0.6, 0.0), cd(0.0, 0.8)};
    double a1 = 1.25, a2 = 0.75;
    std::vector<cd> z3{a1 * omega3[0], a2 * omega3[1], a2 * omega3[2]};
    // L_1^0(0) = 1, L_2^1(0) = C(3,2) = 3
    cd v3 = kernel_Q(ctx3, fam3, 1, 2, a1, a2, z3, omega3);
    double expect = 3.0 / (8.0 * pi_d() * pi_d() * pi_d());
    CHECK(std::abs(v3 - cd(expect, 0.0)) < 1e-15);

    // negative lambda conjugates the phase but keeps the center value
    WeylContext ctxn{2, make_rat(-1, 4)};
    cd vn = kernel_Q(ctxn, fam, 0, 0, 1.0, 1.0, z, omega);
    CHECK(std::abs(vn - v) < 1e-15);
}

TEST_CASE("kernel_Q phase sign distinguishes lambda sign away from center") {
    WeylContext ctxp{2, make_rat(1, 4)};
    WeylContext ctxn{2, make_rat(-1, 4)};
    Family fam = Family::prod(1, 1);
    std::vector<cd> omega{unit(0.9), unit(2.3)};
    std::vector<cd> z{cd(0.5, 0.4), cd(-0.2, 0.7)};
    cd vp = kernel_Q(ctxp, fam, 1, 1, 1.0, 1.0, z, omega);
    cd vn = kernel_Q(ctxn, fam, 1, 1, 1.0, 1.0, z, omega);
    CHECK(std::abs(vn - std::conj(vp)) < 1e-15);
    CHECK(std::abs(vp.imag()) > 1e-4); // the phase actually matters here
}

TEST_CASE("laguerre_precheck finds the known zero at 2|lambda|a^2 = 2") {
    WeylContext ctx{2, make_rat(1)};
    Family fam = Family::prod(1, 1);
    // L_1^1(2) = 0: first offender in scan order is block 1, p = 0, q = 1.
    auto hit = laguerre_precheck(ctx, fam, 1, 0, Rat(1), Rat(1), 3);
    REQUIRE(hit.has_value());
    CHECK(hit->block == 1);
    CHECK(hit->p == 0);
    CHECK(hit->q == 1);

    // At 2|lambda|a^2 = 1/2 no small Laguerre value vanishes.
    WeylContext ctx4{2, make_rat(1, 4)};
    CHECK_FALSE(
        laguerre_precheck(ctx4, fam, 2, 2, Rat(1), Rat(1), 12).has_value());
}

TEST_CASE("surface_b_scalar: trivial bidegree reduces to a Gaussian factor") {
    WeylContext ctx{2, make_rat(1, 4)};
    Family fam = Family::prod(1, 1);
    double b = surface_b_scalar(ctx, fam, 0, 0, 0, 0, 0, 0, 1.0, 1.0);
    CHECK(std::abs(b - std::exp(-0.5)) < 1e-15);
    double b2 = surface_b_scalar(ctx, fam, 0, 0, 0, 0, 0, 0, 2.0, 0.5);
    CHECK(std::abs(b2 - std::exp(-0.25 * (4.0 + 0.25))) < 1e-15);
    // vanishing when p exceeds the block index
    CHECK(surface_b_scalar(ctx, fam, 0, 1, 1, 0, 0, 0, 1.0, 1.0) == 0.0);
}

TEST_CASE("surface average against psi reproduces b times psi") {
    WeylContext ctx{2, make_rat(1, 4)};
    Family fam = Family::prod(1, 1);
    GaussPoly psi = bounded_spherical_product(ctx, fam, 0, 0);
    std::vector<cd> z{cd(0.6, -0.2), cd(0.1, 0.5)};
    cd lhs = surface_convolve_value(ctx, fam, 0, 0, 0, 0, 0, 0, 1.0, 1.0, z);
    cd rhs = surface_b_scalar(ctx, fam, 0, 0, 0, 0, 0, 0, 1.0, 1.0) *
             psi.evaluate(z);
    CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("surface average with a monomial weight matches b times the "
          "derived profile") {
    WeylContext ctx{2, make_rat(1, 4)};
    Family fam = Family::prod(1, 1);
    std::vector<cd> z{cd(0.7, 0.2), cd(-0.3, 0.4)};

    // (p1,q1,p2,q2) = (1,0,0,1) on (m1,m2) = (1,1)
    cd lhs = surface_convolve_value(ctx, fam, 1, 1, 1, 0, 0, 1, 1.0, 1.0, z);
    GaussPoly prof = kernel_mode_profile(ctx, fam, 1, 1, 1, 0, 0, 1);
    cd rhs = surface_b_scalar(ctx, fam, 1, 1, 1, 0, 0, 1, 1.0, 1.0) *
             prof.evaluate(z);
    CHECK(std::abs(lhs - rhs) < 1e-9);

    // vanishing branch: p1 > m1 kills the average entirely
    cd zero = surface_convolve_value(ctx, fam, 0, 1, 1, 0, 0, 0, 1.0, 1.0, z);
    CHECK(std::abs(zero) < 1e-10);
}

TEST_CASE("torus modes of kernel_Q match the scaled profiles") {
    WeylContext ctx{2, make_rat(1, 4)};
    Family fam = Family::prod(1, 1);
    std::vector<cd> z{cd(0.5, 0.3), cd(-0.4, 0.6)};

    struct Mode {
        int s1, s2;
        unsigned p1, q1, p2, q2;
    };
    for (const Mode& md : {Mode{0, 0, 0, 0, 0, 0}, Mode{1, 0, 1, 0, 0, 0},
                           Mode{0, -1, 0, 0, 0, 1}, Mode{1, -2, 1, 0, 0, 2}}) {
        cd lhs = kernel_Q_mode(ctx, fam, 1, 1, 1.0, 1.0, md.s1, md.s2, z);
        GaussPoly prof =
            kernel_mode_profile(ctx, fam, 1, 1, md.p1, md.q1, md.p2, md.q2);
        double b = surface_b_scalar(ctx, fam, 1, 1, md.p1, md.q1, md.p2,
                                    md.q2, 1.0, 1.0);
        cd rhs = b * prof.evaluate(z); // a = 1: no rescale factor
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }

    // a != 1 exercises the a^{-(p+q)} rescale of the mode coefficient
    double a1 = 1.2, a2 = 0.8;
    cd lhs = kernel_Q_mode(ctx, fam, 1, 1, a1, a2, 1, 0, z);
    GaussPoly prof = kernel_mode_profile(ctx, fam, 1, 1, 1, 0, 0, 0);
    cd rhs = (1.0 / a1) *
             surface_b_scalar(ctx, fam, 1, 1, 1, 0, 0, 0, a1, a2) *
             prof.evaluate(z);
    CHECK(std::abs(lhs - rhs) < 1e-9);
}

TEST_CASE("kernel_P: truncated mode series converges to kernel_Q") {
    WeylContext ctx{2, make_rat(1, 4)};
    Family fam = Family::prod(1, 1);
    std::vector<cd> z{cd(0.7, 0.3), cd(-0.5, 0.9)};
    std::vector<cd> omega{unit(0.3), unit(-1.1)};
    double tail = 0;
    cd p = kernel_P(ctx, fam, 1, 1, 1.0, 1.0, 12, z, omega, &tail);
    cd q = kernel_Q(ctx, fam, 1, 1, 1.0, 1.0, z, omega);
    CHECK(tail < 1e-9);
    CHECK(std::abs(p - q) < 1e-8);

    // the reported tail bound is honest: the defect is below it
    CHECK(std::abs(p - q) <= tail + 1e-12);
}

TEST_CASE("kernel_P at zero indices is the bare Gaussian product") {
    WeylContext ctx{2, make_rat(1, 4)};
    Family fam = Family::prod(1, 1);
    std::vector<cd> z{cd(0.4, -0.2), cd(0.3, 0.5)};
    std::vector<cd> omega{unit(1.9), unit(0.6)};
    cd p = kernel_P(ctx, fam, 0, 0, 1.0, 1.0, 0, z, omega, nullptr);
    double lam = 0.25;
    double zz = std::norm(z[0]) + std::norm(z[1]);
    double expect = std::pow(pi_d(), -2.0) * std::pow(2.0 * lam, 2.0) *
                    std::exp(-lam * 2.0) * std::exp(-lam * zz);
    CHECK(std::abs(p - cd(expect, 0.0)) < 1e-15);
}

TEST_CASE("kernel routes reject unsupported inputs") {
    WeylContext ctx{2, make_rat(1, 4)};
    WeylContext ctxneg{2, make_rat(-1, 4)};
    Family fam = Family::prod(1, 1);
    std::vector<cd> z{cd(0.1, 0.2), cd(0.3, 0.4)};
    std::vector<cd> omega{unit(0.5), unit(1.5)};

    CHECK_THROWS_AS(
        surface_b_scalar(ctxneg, fam, 0, 0, 0, 0, 0, 0, 1.0, 1.0),
        domain_error);
    CHECK_THROWS_AS(
        kernel_P(ctxneg, fam, 0, 0, 1.0, 1.0, 4, z, omega, nullptr),
        domain_error);
    CHECK_THROWS_AS(kernel_Q(ctx, Family::un(), 0, 0, 1.0, 1.0, z, omega),
                    domain_error);

    WeylContext ctx3{3, make_rat(1, 4)};
    Family fam21 = Family::prod(2, 1);
    std::vector<cd> z3{cd(0.1, 0.0), cd(0.2, 0.0), cd(0.3, 0.0)};
    CHECK_THROWS_AS(surface_convolve_value(ctx3, fam21, 0, 0, 0, 0, 0, 0, 1.0,
                                           1.0, z3),
                    domain_error);
    CHECK_THROWS_AS(kernel_mode_profile(ctx3, fam21, 0, 0, 0, 0, 0, 0),
                    domain_error);

    // wrong vector lengths
    CHECK_THROWS_AS(kernel_Q(ctx, fam, 0, 0, 1.0, 1.0, z3, omega),
                    domain_error);
}
