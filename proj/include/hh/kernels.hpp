#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hh/context.hpp"
#include "hh/gauss_poly.hpp"

namespace hh {

using cdouble = std::complex<double>;

// L_k^alpha(2|lambda| t) * exp(-|lambda| t) at t >= 0, in floating point.
double laguerre_gaussian_value(const WeylContext& ctx, unsigned k,
                               unsigned alpha, double t);

// Closed-form shift kernel on the product of spheres (shift radii a1, a2 on
// the two blocks of a product family):
//   Q(z, omega) = pi^{-n} (2|lambda|)^n
//     * prod_i exp(-2 i lambda a_i Im(z^i . conj(omega^i)))
//       L_{m_i}^{n_i - 1}(2|lambda| |z^i - a_i omega^i|^2)
//       exp(-|lambda| |z^i - a_i omega^i|^2).
// omega is expected on the product of unit spheres. Works for either sign of
// lambda and any block sizes. Throws domain_error unless fam is a product
// family matching ctx and the vectors have length n.
cdouble kernel_Q(const WeylContext& ctx, const Family& fam, unsigned m1,
                 unsigned m2, double a1, double a2,
                 const std::vector<cdouble>& z,
                 const std::vector<cdouble>& omega);

// First vanishing shift Laguerre value over the requested bidegree range:
// the expansion machinery needs L^{n_i+p+q-1}_{m_i-p}(2|lambda| a_i^2) != 0
// for every block i, p <= m_i, q <= qmax. Returns the first offender
// (block in {1,2}, p, q) in scan order, or nullopt when the radii are
// admissible. Exact rational evaluation.
struct LaguerreZero {
    int block = 0;
    unsigned p = 0, q = 0;
};
std::optional<LaguerreZero> laguerre_precheck(const WeylContext& ctx,
                                              const Family& fam, unsigned m1,
                                              unsigned m2, const Rat& a1,
                                              const Rat& a2, unsigned qmax);

// Scalar of the surface-measure factorization
//   (P dmu_a) x^lambda psi_{m1 m2} = b * theta(P) psi_{m1 m2}
// for P of block bidegrees (p1,q1), (p2,q2), where dmu_a is the normalized
// surface measure on the product of spheres of radii a1, a2:
//   b = prod_i (-1)^{q_i} [Gamma(n_i) Gamma(m_i - p_i + 1) / Gamma(m_i + n_i + q_i)]
//       a_i^{2(p_i + q_i)} L^{n_i + p_i + q_i - 1}_{m_i - p_i}(2 lambda a_i^2)
//       exp(-lambda a_i^2),
// and 0 when p_i > m_i for some block. Requires lambda > 0.
double surface_b_scalar(const WeylContext& ctx, const Family& fam, unsigned m1,
                        unsigned m2, unsigned p1, unsigned q1, unsigned p2,
                        unsigned q2, double a1, double a2);

// Quadrature route for the left side of the factorization above, at one
// point z: the twisted convolution of the monomial-harmonic surface density
//   P(w) = w1^{p1} conj(w1)^{q1} w2^{p2} conj(w2)^{q2}   (against dmu_a)
// with psi_{m1 m2}:
//   (2pi)^{-2} * double circle integral of
//     P(a e^{it}) psi(z - a e^{it}) exp(-2 i lambda Im(z . conj(a e^{it}))) dt.
// Blocks of size one only (exact circle rule, geometric convergence); the
// rule is doubled until two refinements agree to tol, else throws
// domain_error (quadrature resolution insufficient).
cdouble surface_convolve_value(const WeylContext& ctx, const Family& fam,
                               unsigned m1, unsigned m2, unsigned p1,
                               unsigned q1, unsigned p2, unsigned q2,
                               double a1, double a2,
                               const std::vector<cdouble>& z,
                               double tol = 1e-10);

// Fourier mode of the shift kernel on the torus (blocks of size one):
//   (2pi)^{-2} * double circle integral of Q(z, (e^{i t1}, e^{i t2}))
//                 e^{i (s1 t1 + s2 t2)} dt.
// By the surface factorization this equals
//   a1^{-(p1+q1)} a2^{-(p2+q2)} b_{pq} * theta(B_s) psi_{m1 m2}(z)
// where (p_i, q_i) = (max(s_i,0), max(-s_i,0)) and B_s the monomial
// harmonic of those bidegrees. Doubling rectangle rule, tolerance tol.
cdouble kernel_Q_mode(const WeylContext& ctx, const Family& fam, unsigned m1,
                      unsigned m2, double a1, double a2, int s1, int s2,
                      const std::vector<cdouble>& z, double tol = 1e-10);

// Exact z-profile of the (p,q) kernel mode: theta(B) psi_{m1 m2} for the
// monomial solid harmonic B = z1^{p1} conj(z1)^{q1} z2^{p2} conj(z2)^{q2}
// (blocks of size one). The mode value at z is
//   a1^{-(p1+q1)} a2^{-(p2+q2)} * b * profile(z).
GaussPoly kernel_mode_profile(const WeylContext& ctx, const Family& fam,
                              unsigned m1, unsigned m2, unsigned p1,
                              unsigned q1, unsigned p2, unsigned q2);

// Truncated bigraded series of the shift kernel (blocks of size one):
//   P(z, omega) = sum over block modes (p_i <= m_i or p_i = 0, q_i <= qmax)
//     of  mode_{pq}(z) * conj(B_s(omega)),
// which converges to kernel_Q(z, omega) as qmax grows (factorial tail). The
// sum factorizes per block and is evaluated that way. If tail_bound is
// non-null it receives an upper estimate of the dropped tail, from five
// extra shells and their geometric decay ratio. Requires lambda > 0.
cdouble kernel_P(const WeylContext& ctx, const Family& fam, unsigned m1,
                 unsigned m2, double a1, double a2, unsigned qmax,
                 const std::vector<cdouble>& z,
                 const std::vector<cdouble>& omega,
                 double* tail_bound = nullptr);

} // namespace hh
