#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "hh/pi_scalar.hpp"
#include "hh/serialize.hpp"
#include "test_util.hpp"

using namespace hh;
using hhtest::make_rng;
using hhtest::random_pi_scalar;

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

double rel_err(std::complex<double> got, std::complex<double> want) {
    double scale = std::max(1.0, std::abs(want));
    return std::abs(got - want) / scale;
}
} // namespace

TEST_CASE("rational layer canonicalizes and computes") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(-3, -6) == make_rat(1, 2));
    CHECK(rat_from_string("10/15") == make_rat(2, 3));
    CHECK(rat_to_string(make_rat(-5, 10)) == "-1/2");
    CHECK(rat_pow(make_rat(2, 3), -2) == make_rat(9, 4));
    CHECK(factorial(6) == 720);
    CHECK(binomial(7, 3) == 35);
    CHECK(gamma_int(5) == 24);

    CRat i = CRat::unit_i();
    CHECK(i * i == CRat(make_rat(-1)));
    CRat z(make_rat(1, 2), make_rat(-3));
    CHECK(z * z.conj() == CRat(z.norm2()));
    CHECK((z / z) == CRat(make_rat(1)));
}

TEST_CASE("pi-scalar ring axioms hold on random samples") {
    auto rng = make_rng(11);
    for (int round = 0; round < 200; ++round) {
        PiScalar a = random_pi_scalar(rng);
        PiScalar b = random_pi_scalar(rng);
        PiScalar c = random_pi_scalar(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == PiScalar::zero());
        CHECK(a * PiScalar::one() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((-a) + a == PiScalar::zero());
    }
}

TEST_CASE("pi-scalar stores no zero coefficients") {
    PiScalar p = PiScalar::pi_pow(1, CRat(make_rat(1)));
    PiScalar q = p - p;
    CHECK(q.is_zero());
    CHECK(q.terms().empty());

    PiScalar r = PiScalar::pi_pow(2, CRat(make_rat(3))) + PiScalar::pi_pow(0, CRat(make_rat(1)));
    r -= PiScalar::pi_pow(2, CRat(make_rat(3)));
    CHECK(r.terms().size() == 1);
    CHECK(r.is_rational());
    CHECK(r.as_rat() == CRat(make_rat(1)));
}

TEST_CASE("evaluation is a ring homomorphism within 1e-12 relative") {
    auto rng = make_rng(12);
    for (int round = 0; round < 100; ++round) {
        PiScalar a = random_pi_scalar(rng, 4);
        PiScalar b = random_pi_scalar(rng, 4);
        auto lhs = (a * b).eval();
        auto rhs = a.eval() * b.eval();
        CHECK(rel_err(lhs, rhs) < 1e-12);
        CHECK(rel_err((a + b).eval(), a.eval() + b.eval()) < 1e-12);
    }
    CHECK(rel_err(PiScalar::pi_pow(1, CRat(make_rat(1))).eval(), {kPi, 0.0}) < 1e-15);
    CHECK(rel_err(PiScalar::pi_pow(-8, CRat(make_rat(1))).eval(),
                  {std::pow(kPi, -8.0), 0.0}) < 1e-13);
}

TEST_CASE("exact division undoes single-term multiplication") {
    auto rng = make_rng(13);
    for (int round = 0; round < 50; ++round) {
        PiScalar a = random_pi_scalar(rng);
        PiScalar m = PiScalar::pi_pow(-2 + int(round % 5), CRat(make_rat(3, 2), make_rat(-1)));
        CHECK((a * m).divide_exact(m) == a);
    }
    PiScalar two_terms = PiScalar::pi_pow(0, CRat(make_rat(1))) + PiScalar::pi_pow(1, CRat(make_rat(1)));
    CHECK_THROWS_AS(PiScalar::one().divide_exact(two_terms), domain_error);
    CHECK_THROWS_AS(PiScalar::one().divide_exact(PiScalar::zero()), domain_error);
}

TEST_CASE("pretty printing uses compact exact forms") {
    CHECK(PiScalar::zero().str() == "0");
    CHECK(PiScalar::from_int(-3).str() == "-3");
    CHECK(PiScalar::pi_pow(1, CRat(make_rat(1, 2))).str() == "pi/2");
    CHECK(PiScalar::pi_pow(2, CRat(make_rat(-3, 4))).str() == "-3*pi^2/4");
    CHECK(PiScalar::pi_pow(-1, CRat(make_rat(2))).str() == "2*pi^-1");
    CHECK(PiScalar::pi_pow(1, CRat(make_rat(0), make_rat(1))).str() == "i*pi");
}

TEST_CASE("pi-scalar JSON round-trips exactly and deterministically") {
    auto rng = make_rng(14);
    for (int round = 0; round < 40; ++round) {
        PiScalar a = random_pi_scalar(rng);
        ojson j = pi_scalar_to_json(a);
        PiScalar back = pi_scalar_from_json(j);
        CHECK(back == a);
        CHECK(pi_scalar_to_json(back).dump() == j.dump());
    }
    ojson j = pi_scalar_to_json(PiScalar::pi_pow(3, CRat(make_rat(5, 6), make_rat(-1, 7))));
    CHECK(j.is_array());
    CHECK(j[0]["pi"] == 3);
    CHECK(j[0]["re"] == "5/6");
    CHECK(j[0]["im"] == "-1/7");
}
