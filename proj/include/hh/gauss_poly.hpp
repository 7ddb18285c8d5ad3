#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "hh/context.hpp"
#include "hh/multi_index.hpp"
#include "hh/pi_scalar.hpp"

namespace hh {

// Key of one term z^a zbar^b.
struct TermKey {
    MIdx a, b;
    friend bool operator==(const TermKey& x, const TermKey& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// Graded order: total degree, then a, then b (lexicographic).
struct TermKeyLess {
    bool operator()(const TermKey& x, const TermKey& y) const {
        uint32_t dx = mi_degree(x.a) + mi_degree(x.b);
        uint32_t dy = mi_degree(y.a) + mi_degree(y.b);
        if (dx != dy) return dx < dy;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

// Finite sum  sum_{a,b} c_{a,b} z^a zbar^b exp(-t|z|^2)  on C^n with exact
// PiScalar coefficients and rational t >= 0. t = 0 is a bare polynomial.
class GaussPoly {
public:
    using TermMap = std::map<TermKey, PiScalar, TermKeyLess>;

    GaussPoly(WeylContext ctx, Rat gauss_t);

    static GaussPoly zero(const WeylContext& ctx, Rat t) {
        return GaussPoly(ctx, std::move(t));
    }
    static GaussPoly constant(const WeylContext& ctx, Rat t, PiScalar c);
    static GaussPoly monomial(const WeylContext& ctx, Rat t, MIdx a, MIdx b,
                              PiScalar c);

    const WeylContext& context() const { return ctx_; }
    const Rat& gauss_t() const { return t_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const { return t_ == 0; }
    std::size_t term_count() const { return terms_.size(); }
    uint32_t degree() const; // max |a|+|b|; 0 when zero
    const TermMap& terms() const { return terms_; }

    PiScalar coeff(const MIdx& a, const MIdx& b) const;
    // Accumulates; drops the term when the sum cancels.
    void add_term(const MIdx& a, const MIdx& b, const PiScalar& c);

    GaussPoly operator-() const;
    GaussPoly& operator+=(const GaussPoly& o); // same context and gauss_t
    GaussPoly& operator-=(const GaussPoly& o);
    friend GaussPoly operator+(GaussPoly x, const GaussPoly& y) { return x += y; }
    friend GaussPoly operator-(GaussPoly x, const GaussPoly& y) { return x -= y; }
    // Pointwise product: gauss_t adds; subject to the degree cap.
    friend GaussPoly operator*(const GaussPoly& x, const GaussPoly& y);

    GaussPoly& scale(const PiScalar& c);
    friend GaussPoly operator*(GaussPoly x, const PiScalar& c) { return x.scale(c); }
    friend GaussPoly operator*(const PiScalar& c, GaussPoly x) { return x.scale(c); }

    GaussPoly conj() const;    // (a,b,c) -> (b,a,conj c); t unchanged
    GaussPoly reflect() const; // f(-z): sign (-1)^{|a|+|b|}

    // Multiply by e^{-dt|z|^2}; the new gauss_t must stay >= 0.
    GaussPoly times_gauss(const Rat& dt) const;

    GaussPoly mul_z(int j) const;    // * z_j
    GaussPoly mul_zbar(int j) const; // * zbar_j
    GaussPoly dz(int j) const;       // d/dz_j, including the Gaussian factor
    GaussPoly dzbar(int j) const;    // d/dzbar_j

    std::complex<double> evaluate(const std::vector<std::complex<double>>& z) const;

    friend bool operator==(const GaussPoly& x, const GaussPoly& y) {
        return x.ctx_ == y.ctx_ && x.t_ == y.t_ && x.terms_ == y.terms_;
    }
    friend bool operator!=(const GaussPoly& x, const GaussPoly& y) {
        return !(x == y);
    }

private:
    WeylContext ctx_;
    Rat t_;
    TermMap terms_;

    void check_key(const MIdx& a, const MIdx& b) const;
};

// int_{C^n} f dz. Exact:  int z^a zbar^b e^{-t|z|^2} = [a==b] pi^n a! / t^{|a|+n}.
// Requires gauss_t > 0 for nonzero f.
PiScalar integrate(const GaussPoly& f);

// L^2 pairing int f conj(g); linear in f.
PiScalar l2_inner(const GaussPoly& f, const GaussPoly& g);

// First-order invariant operators (lambda from the context of f):
//   L_j    = d/dzbar_j - lambda z_j      Lbar_j = d/dz_j + lambda zbar_j
//   R_j    = d/dzbar_j + lambda z_j      Rbar_j = d/dz_j - lambda zbar_j
GaussPoly op_L(const GaussPoly& f, int j);
GaussPoly op_Lbar(const GaussPoly& f, int j);
GaussPoly op_R(const GaussPoly& f, int j);
GaussPoly op_Rbar(const GaussPoly& f, int j);

struct OpFactor {
    enum Kind { dz, dzbar, mz, mzbar, L, Lbar, R, Rbar } kind;
    int j;
};
// Composition word, leftmost factor applied last (operator notation).
using OpWord = std::vector<OpFactor>;

GaussPoly apply_factor(const GaussPoly& f, const OpFactor& op);
GaussPoly apply_word(const GaussPoly& f, const OpWord& w);

// Finite PiScalar-linear combination of composition words.
class InvariantOp {
public:
    InvariantOp() = default; // zero operator
    static InvariantOp identity() { return word({}); }
    static InvariantOp word(OpWord w, PiScalar c = PiScalar::one());

    InvariantOp& add(PiScalar c, OpWord w);
    InvariantOp& operator+=(const InvariantOp& o);
    InvariantOp& scale(const PiScalar& c);
    // Composition: (A*B) f = A (B f).
    friend InvariantOp operator*(const InvariantOp& A, const InvariantOp& B);

    GaussPoly apply(const GaussPoly& f) const;
    const std::vector<std::pair<PiScalar, OpWord>>& terms() const { return terms_; }

private:
    std::vector<std::pair<PiScalar, OpWord>> terms_;
};

// Geller-Weyl lift of a polynomial p (gauss_t must be 0):
// for each monomial c zeta^rho zetabar^gamma of p,
//   theta1 contributes c Rbar^gamma (-R)^rho,
//   theta2 contributes c (-R)^rho Rbar^gamma,
// and theta is their average. The two agree when p is harmonic.
GaussPoly theta1(const GaussPoly& p, const GaussPoly& f);
GaussPoly theta2(const GaussPoly& p, const GaussPoly& f);
GaussPoly theta(const GaussPoly& p, const GaussPoly& f);

// Twisted convolution
//   (f x_lambda g)(z) = int f(z-w) g(w) exp(2 i lambda Im(z . wbar)) dw,
// computed in closed form via exact Gaussian moments. Both factors must have
// gauss_t = |lambda| (the class closed under the product); the result does too.
GaussPoly twisted_convolve(const GaussPoly& f, const GaussPoly& g);

} // namespace hh
