#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hh/laguerre.hpp"
#include "hh/matrix_serialize.hpp"
#include "hh/weyl.hpp"
#include "test_util.hpp"

using namespace hh;
using hhtest::make_rng;
using hhtest::random_gauss_poly;

namespace {

// pi^{-n} (2|lambda|)^n L_k^{n-1}(2|lambda||z|^2) e^{-|lambda||z|^2}
GaussPoly psi_k(const WeylContext& ctx, unsigned k) {
    GaussPoly lag = laguerre_radial(ctx, k, unsigned(ctx.n) - 1,
                                    ctx.two_abs_lambda(), 0, unsigned(ctx.n));
    PiScalar c = PiScalar::pi_pow(-ctx.n, CRat(rat_pow(ctx.two_abs_lambda(), ctx.n)));
    return lag.times_gauss(ctx.abs_lambda()).scale(c);
}

// True on the sub-block where both row and column degree stay <= maxdeg.
bool equal_on_subblock(const OperatorMatrix& A, const OperatorMatrix& B,
                       uint32_t maxdeg) {
    const FockTruncation& f = A.fock();
    for (std::size_t mu = 0; mu < f.dim(); ++mu) {
        if (f.degree_of(mu) > maxdeg) continue;
        for (std::size_t nu = 0; nu < f.dim(); ++nu) {
            if (f.degree_of(nu) > maxdeg) continue;
            if (!(A.at(mu, nu) == B.at(mu, nu))) return false;
        }
    }
    return true;
}

CMatrix cmat_mul(const CMatrix& A, const CMatrix& B) {
    std::size_t n = A.size();
    CMatrix R(n, std::vector<CRat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                R[i][j] = R[i][j] + A[i][k] * B[k][j];
    return R;
}

CMatrix cmat_adjoint(const CMatrix& A) {
    std::size_t n = A.size();
    CMatrix R(n, std::vector<CRat>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) R[i][j] = A[j][i].conj();
    return R;
}

CMatrix rot25() {
    return {{CRat(make_rat(3, 5)), CRat(make_rat(4, 5))},
            {CRat(make_rat(-4, 5)), CRat(make_rat(3, 5))}};
}

CMatrix phase25() {
    return {{CRat(make_rat(3, 5), make_rat(4, 5)), CRat()},
            {CRat(), CRat(make_rat(5, 13), make_rat(-12, 13))}};
}

} // namespace

TEST_CASE("truncation enumerates the graded basis with gram weights") {
    FockPtr f = make_fock(WeylContext(2, make_rat(1)), 3);
    CHECK(f->dim() == 10); // C(3+2,2)
    CHECK(f->index(0) == MIdx{0, 0});
    CHECK(f->degree_of(f->dim() - 1) == 3);
    // g_nu = nu! / 2^{|nu|} at lambda = 1.
    CHECK(f->gram_of(MIdx{0, 0}) == make_rat(1));
    CHECK(f->gram_of(MIdx{1, 0}) == make_rat(1, 2));
    CHECK(f->gram_of(MIdx{2, 1}) == make_rat(2, 8));
    CHECK(f->degree_slice(2).size() == 3);
    CHECK_THROWS_AS(f->position(MIdx{4, 0}), truncation_error);

    Family fam = Family::prod(1, 1);
    FockPtr g = make_fock(WeylContext(2, make_rat(1)), 4);
    CHECK(g->block_slice(fam, 2, 1).size() == 1);
    CHECK(g->block_slice(fam, 2, 1)[0] == g->position(MIdx{2, 1}));
}

TEST_CASE("ladder pair satisfies the canonical commutation relations") {
    for (const Rat& lam : {make_rat(1), make_rat(-1), make_rat(3, 2), make_rat(-3, 2)}) {
        for (int n : {1, 2}) {
            WeylContext ctx(n, lam);
            FockPtr fock = make_fock(ctx, 4);
            for (int j = 0; j < n; ++j) {
                for (int k = 0; k < n; ++k) {
                    OperatorMatrix comm = ladder_Wbar(fock, j) * ladder_W(fock, k) -
                                          ladder_W(fock, k) * ladder_Wbar(fock, j);
                    OperatorMatrix want(fock);
                    if (j == k) {
                        want = OperatorMatrix::identity(fock);
                        want.scale(PiScalar::from_rat(Rat(-2) * lam));
                    }
                    CHECK(equal_on_subblock(comm, want, 3));
                }
                // adj(W_j) = Wbar_j away from the cutoff shell.
                CHECK(equal_on_subblock(ladder_W(fock, j).adjoint(),
                                        ladder_Wbar(fock, j), 3));
            }
        }
    }
}

TEST_CASE("degree and block projectors resolve the identity") {
    FockPtr fock = make_fock(WeylContext(2, make_rat(1)), 4);
    OperatorMatrix sum(fock);
    for (uint32_t k = 0; k <= 4; ++k) {
        OperatorMatrix p = degree_projector(fock, k);
        CHECK(p * p == p);
        sum += p;
    }
    CHECK(sum == OperatorMatrix::identity(fock));

    Family fam = Family::prod(1, 1);
    OperatorMatrix bsum(fock);
    for (uint32_t m1 = 0; m1 <= 4; ++m1)
        for (uint32_t m2 = 0; m1 + m2 <= 4; ++m2)
            bsum += block_projector(fock, fam, m1, m2);
    CHECK(bsum == OperatorMatrix::identity(fock));
}

TEST_CASE("transform matches hand-computed matrix elements") {
    WeylContext ctx(1, make_rat(1));
    FockPtr fock = make_fock(ctx, 3);

    // Plain gaussian: only the vacuum entry, value pi / (2 lambda).
    GaussPoly gauss = GaussPoly::constant(ctx, make_rat(1), PiScalar::one());
    OperatorMatrix S = weyl_transform(gauss, fock);
    CHECK(S.at(0, 0) == PiScalar::pi_pow(1, CRat(make_rat(1, 2))));
    CHECK(S.nnz() == 1);

    // z e^{-|z|^2}: single entry (0,1) with value pi/4.
    GaussPoly ze = GaussPoly::monomial(ctx, make_rat(1), MIdx{1}, MIdx{0},
                                       PiScalar::one());
    OperatorMatrix T = weyl_transform(ze, fock);
    CHECK(T.at(0, 1) == PiScalar::pi_pow(1, CRat(make_rat(1, 4))));
    CHECK(T.nnz() == 1); // higher entries in the same band cancel exactly
}

TEST_CASE("laguerre states map to the degree projectors") {
    for (int n : {1, 2}) {
        for (const Rat& lam : {make_rat(1), make_rat(-1), make_rat(1, 2)}) {
            WeylContext ctx(n, lam);
            FockPtr fock = make_fock(ctx, 5);
            for (unsigned k = 0; k <= 3; ++k) {
                OperatorMatrix got = weyl_transform(psi_k(ctx, k), fock);
                CHECK(got == degree_projector(fock, k));
            }
        }
    }
}

TEST_CASE("inversion undoes the transform on gaussian-class functions") {
    auto rng = make_rng(31);
    for (const Rat& lam : {make_rat(1), make_rat(-2)}) {
        for (int n : {1, 2}) {
            WeylContext ctx(n, lam);
            FockPtr fock = make_fock(ctx, 8);
            for (int round = 0; round < 6; ++round) {
                GaussPoly f = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 4, 2);
                CHECK(inverse_weyl(weyl_transform(f, fock)) == f);
            }
        }
    }
}

TEST_CASE("transform intertwines invariant operators with ladder actions") {
    auto rng = make_rng(32);
    for (const Rat& lam : {make_rat(1), make_rat(-1)}) {
        WeylContext ctx(2, lam);
        FockPtr fock = make_fock(ctx, 6);
        GaussPoly f = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 4, 2);
        OperatorMatrix S = weyl_transform(f, fock);
        for (int j = 0; j < 2; ++j) {
            OperatorMatrix W = ladder_W(fock, j);
            OperatorMatrix Wb = ladder_Wbar(fock, j);
            CHECK(equal_on_subblock(weyl_transform(op_L(f, j), fock), -(S * W), 5));
            CHECK(equal_on_subblock(weyl_transform(op_Lbar(f, j), fock), S * Wb, 5));
            CHECK(equal_on_subblock(weyl_transform(op_R(f, j), fock), -(W * S), 5));
            CHECK(equal_on_subblock(weyl_transform(op_Rbar(f, j), fock), Wb * S, 5));
        }
    }
}

TEST_CASE("transform carries the twisted product to the matrix product") {
    auto rng = make_rng(33);
    for (const Rat& lam : {make_rat(1), make_rat(-1), make_rat(1, 2)}) {
        WeylContext ctx(1, lam);
        FockPtr fock = make_fock(ctx, 6);
        for (int round = 0; round < 5; ++round) {
            GaussPoly f = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 3, 2);
            GaussPoly g = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 3, 2);
            OperatorMatrix lhs = weyl_transform(twisted_convolve(f, g), fock);
            OperatorMatrix rhs = weyl_transform(f, fock) * weyl_transform(g, fock);
            CHECK(equal_on_subblock(lhs, rhs, 2));
        }
    }
}

TEST_CASE("conjugation maps to the adjoint of the reflected transform") {
    auto rng = make_rng(34);
    WeylContext ctx(2, make_rat(1));
    FockPtr fock = make_fock(ctx, 5);
    for (int round = 0; round < 6; ++round) {
        GaussPoly f = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 4, 2);
        CHECK(weyl_transform(f.conj(), fock) ==
              weyl_transform(f.reflect(), fock).adjoint());
    }
}

TEST_CASE("plancherel pairing holds exactly inside the truncation") {
    auto rng = make_rng(35);
    for (const Rat& lam : {make_rat(1), make_rat(-3, 2)}) {
        WeylContext ctx(2, lam);
        FockPtr fock = make_fock(ctx, 7);
        PiScalar cst = PiScalar::pi_pow(-2, CRat(rat_pow(ctx.two_abs_lambda(), 2)));
        for (int round = 0; round < 5; ++round) {
            GaussPoly f = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 4, 2);
            GaussPoly g = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 4, 2);
            PiScalar lhs = l2_inner(f, g);
            PiScalar rhs =
                cst * hs_inner(weyl_transform(f, fock), weyl_transform(g, fock));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("unitary substitution is exactly unitary and equivariant") {
    auto rng = make_rng(36);
    CMatrix U = cmat_mul(rot25(), phase25());
    REQUIRE(is_unitary(U));
    for (const Rat& lam : {make_rat(1), make_rat(-1)}) {
        WeylContext ctx(2, lam);
        FockPtr fock = make_fock(ctx, 4);
        OperatorMatrix Uk = fock_unitary(fock, U);
        OperatorMatrix Uk_inv = fock_unitary(fock, cmat_adjoint(U));
        CHECK(Uk * Uk_inv == OperatorMatrix::identity(fock));
        CHECK(Uk.adjoint() == Uk_inv);

        GaussPoly f = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 4, 2);
        OperatorMatrix lhs = weyl_transform(rotate_gausspoly(f, U), fock);
        OperatorMatrix rhs = Uk * weyl_transform(f, fock) * Uk_inv;
        CHECK(lhs == rhs);
    }

    // Rotation preserves twisted products as well.
    WeylContext ctx(2, make_rat(1));
    GaussPoly f = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 3, 1);
    GaussPoly g = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 3, 1);
    CHECK(rotate_gausspoly(twisted_convolve(f, g), U) ==
          twisted_convolve(rotate_gausspoly(f, U), rotate_gausspoly(g, U)));

    CMatrix bad = {{CRat(make_rat(1)), CRat(make_rat(1))},
                   {CRat(), CRat(make_rat(1))}};
    FockPtr fock = make_fock(ctx, 2);
    CHECK_THROWS_AS(fock_unitary(fock, bad), domain_error);
}

TEST_CASE("tau lifts the geller multiplier to ladder words") {
    auto rng = make_rng(37);
    for (const Rat& lam : {make_rat(1), make_rat(-1)}) {
        WeylContext ctx(2, lam);
        FockPtr fock = make_fock(ctx, 8);
        GaussPoly f = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 3, 1);
        OperatorMatrix S = weyl_transform(f, fock);

        GaussPoly harm = GaussPoly::monomial(ctx, make_rat(0), MIdx{1, 0},
                                             MIdx{0, 1}, PiScalar::one());
        GaussPoly plain = GaussPoly::monomial(ctx, make_rat(0), MIdx{2, 0},
                                              MIdx{0, 0}, PiScalar::one());
        for (const GaussPoly& p : {harm, plain}) {
            uint32_t safe = 8 - 2 - uint32_t(f.degree());
            CHECK(equal_on_subblock(weyl_transform(theta1(p, f), fock),
                                    tau1(p, fock) * S, safe));
            CHECK(equal_on_subblock(weyl_transform(theta2(p, f), fock),
                                    tau2(p, fock) * S, safe));
            CHECK(equal_on_subblock(weyl_transform(theta(p, f), fock),
                                    tau(p, fock) * S, safe));
        }
        // Harmonic arguments make the two halves agree.
        CHECK(equal_on_subblock(tau1(harm, fock), tau2(harm, fock), 6));
    }
}

TEST_CASE("operator JSON round-trips exactly and deterministically") {
    auto rng = make_rng(38);
    WeylContext ctx(2, make_rat(-5, 3));
    FockPtr fock = make_fock(ctx, 4);
    GaussPoly f = random_gauss_poly(rng, ctx, ctx.abs_lambda(), 4, 2);
    OperatorMatrix S = weyl_transform(f, fock);
    ojson j = operator_to_json(S);
    OperatorMatrix back = operator_from_json(j);
    CHECK(back == S);
    CHECK(operator_to_json(back).dump() == j.dump());
    CHECK(j["N"] == 4);
    CHECK(j["lambda"] == "-5/3");
}

TEST_CASE("cutoff zero leaves an empty interior") {
    FockPtr fock = make_fock(WeylContext(2, make_rat(1)), 0);
    CHECK(fock->dim() == 1);
    CHECK(fock->degree_slice(0).size() == 1);
    CHECK(fock->degree_slice(1).empty());
    // Ladder relations have no interior rows/columns to check.
    OperatorMatrix w = ladder_W(fock, 0);
    CHECK(w.is_zero());
}
