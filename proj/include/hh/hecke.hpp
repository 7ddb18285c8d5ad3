#pragma once

#include <vector>

#include "hh/fock.hpp"
#include "hh/gauss_poly.hpp"
#include "hh/harmonic.hpp"
#include "hh/spherical.hpp"
#include "hh/weyl.hpp"

namespace hh {

// Bare copy of the polynomial coefficient of a Gaussian polynomial.
GaussPoly polynomial_part(const GaussPoly& f);

// Exact invariance test for the family action: the polynomial part must be
// annihilated by every infinitesimal block rotation
//   E_{jk} = z_j d/dz_k - zbar_k d/dzbar_j,  j,k within one family block
// (full unitary family: the single block [0, n)).
bool is_invariant(const GaussPoly& g, const Family& fam);

// One expansion coefficient of F = P.g at level k, computed by two
// independent routes that must agree.
struct HeckeCoefficient {
    unsigned k = 0;
    PiScalar C;        // Gram-normalized projection route
    PiScalar c_closed; // factorial-ratio radial-integral route
};

// Expansion coefficients C_k (k = 0..kmax) in the factorization
//   F x psi_k = C_k . theta(P) psi_k,     F = P.g,
// for P a solid-harmonic polynomial of pure bidegree (p,q) and g an invariant
// Gaussian polynomial with gauss_t > 0. Routes, with (pp,qq) the
// lambda-sign-swapped bidegree:
//   C        = A^{-1} int conj(radial factor) . |z|^{2(p+q)} . g . e^{-|lambda||z|^2},
//              A = spherical_norm_scalar(p,q,k),
//   c_closed = (-1)^q (n-1)!(k-pp)!/(k+n+qq-1)!
//              int L_{k-pp}^{n+p+q-1}(2|lambda||z|^2) |z|^{2(p+q)} g e^{-|lambda||z|^2};
// both zero when pp > k. Throws domain_error when P is not harmonic of pure
// bidegree or g is not invariant or g has gauss_t = 0.
std::vector<HeckeCoefficient> hecke_bochner(const GaussPoly& P,
                                            const GaussPoly& g, unsigned kmax);

struct HeckeCoefficientProduct {
    unsigned m1 = 0, m2 = 0;
    PiScalar C;
    PiScalar c_closed;
};

// Product-family analogue over levels (m1, m2) <= (m1max, m2max): P must be
// harmonic in each block of pure per-block bidegree, g invariant under both
// block actions. The closed route carries per-block factorial ratios and the
// joint integral with prod_i |z^i|^{2(p_i+q_i)} L-factors.
std::vector<HeckeCoefficientProduct> hecke_bochner_product(
    const GaussPoly& P, const GaussPoly& g, const Family& fam, unsigned m1max,
    unsigned m2max);

// Exact check of the factorization at one level: requires g.gauss_t() ==
// |lambda| so the twisted product is available in closed form.
bool hecke_identity_holds(const GaussPoly& P, const GaussPoly& g, unsigned k,
                          const PiScalar& C);
bool hecke_identity_holds_product(const GaussPoly& P, const GaussPoly& g,
                                  const Family& fam, unsigned m1, unsigned m2,
                                  const PiScalar& C);

// Weighted column pairing sum_j r_j <theta(B_j) psi_ka, theta(B_j) psi_kb>.
// ka == kb yields the squared column norm (equals
// spherical_norm_scalar(p,q,ka)); ka != kb vanishes by Laguerre
// orthogonality.
PiScalar column_pairing(const HarmonicColumn& col, unsigned ka, unsigned kb);

// Product-family pairing across levels (m1a,m2a) and (m1b,m2b).
PiScalar column_pairing_product(const HarmonicColumn& col, const Family& fam,
                                unsigned m1a, unsigned m2a, unsigned m1b,
                                unsigned m2b);

// Eigenfunction synthesis from an operator supported on one eigenspace:
//   f = sum_{nu in band} (1/g_nu) sum_mu S_{mu,nu} conj(me(nu,mu)).
// Throws domain_error when S has a nonzero entry off the band (rows or
// columns). The result satisfies the special-Hermite eigen-equation at level
// k and the norm identity ||f||_2^2 = pi^n (2|lambda|)^{-n} <S,S>_HS.
GaussPoly eigenfunction_from_band(const OperatorMatrix& S, uint32_t k);
GaussPoly eigenfunction_from_block(const OperatorMatrix& S, const Family& fam,
                                   uint32_t m1, uint32_t m2);

} // namespace hh
