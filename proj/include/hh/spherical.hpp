#pragma once

#include <vector>

#include "hh/context.hpp"
#include "hh/gauss_poly.hpp"
#include "hh/harmonic.hpp"
#include "hh/laguerre.hpp"

namespace hh {

// Bounded spherical function for the full unitary family:
//   psi_k = pi^{-n} (2|lambda|)^n L_k^{n-1}(2|lambda| |z|^2) e^{-|lambda| |z|^2}.
// psi_0 is the unit of the twisted product on its degree band, and
// psi_k x psi_l = [k==l] psi_k.
GaussPoly bounded_spherical(const WeylContext& ctx, unsigned k);

// Bounded spherical function for the product family U(n1) x U(n2):
//   psi_{m1,m2} = pi^{-n} (2|lambda|)^n
//       L_{m1}^{n1-1}(2|lambda| |z^1|^2) L_{m2}^{n2-1}(2|lambda| |z^2|^2)
//       e^{-|lambda| |z|^2},
// where z = (z^1, z^2) splits by the family blocks.
GaussPoly bounded_spherical_product(const WeylContext& ctx, const Family& fam,
                                    unsigned m1, unsigned m2);

// The special-Hermite operator  sum_j (L_j Lbar_j + Lbar_j L_j)  as an
// operator word; radial Gaussians times Laguerre factors diagonalize it.
InvariantOp special_hermite_op(const WeylContext& ctx);

// Its eigenvalue -2|lambda| (2k + n) on the k-th eigenspace (for the product
// family, pass k = m1 + m2).
PiScalar special_hermite_eigenvalue(const WeylContext& ctx, unsigned k);

// Per-block operator sum_{j in block} (L_j Lbar_j + Lbar_j L_j) for the
// product family (block 1 or 2), with eigenvalue -2|lambda| (2m_i + n_i) on
// the (m1, m2) eigenspace.
InvariantOp special_hermite_op_block(const WeylContext& ctx, const Family& fam,
                                     int block);
PiScalar special_hermite_eigenvalue_block(const WeylContext& ctx,
                                          const Family& fam, int block,
                                          unsigned m);

// Bidegree of a bare polynomial: every monomial z^a zbar^b must satisfy
// |a| = p, |b| = q over the coordinate range [lo, hi). Throws domain_error
// if P is not bare or mixes bidegrees.
std::pair<unsigned, unsigned> bidegree(const GaussPoly& P, int lo, int hi);

// Radial factor of the generalized spherical functions of bidegree (p,q) at
// level k, as a bare polynomial. With (pp,qq) = (p,q) for lambda > 0 and
// (q,p) for lambda < 0:
//   (-1)^q pi^{-n} (2|lambda|)^{n+p+q} L_{k-pp}^{n+p+q-1}(2|lambda| |z|^2),
// zero when pp > k.
GaussPoly spherical_radial_factor(const WeylContext& ctx, unsigned p,
                                  unsigned q, unsigned k);

// Product-family analogue: prod_i (-1)^{q_i} (2|lambda|)^{p_i+q_i}
//   L_{m_i-pp_i}^{n_i+p_i+q_i-1}(2|lambda| |z^i|^2) times pi^{-n} (2|lambda|)^n,
// zero when pp_i > m_i for some block.
GaussPoly spherical_radial_factor_product(const WeylContext& ctx,
                                          const Family& fam, unsigned m1,
                                          unsigned m2, unsigned p1, unsigned q1,
                                          unsigned p2, unsigned q2);

// Generalized spherical function: the derivative lift of a bidegree-(p,q)
// polynomial P applied to the k-th bounded spherical function, in closed form:
//   theta(P) psi_k = P . spherical_radial_factor(p,q,k) . e^{-|lambda| |z|^2},
// and zero when pp > k. Exactness of the closed form requires P harmonic;
// callers pass solid-harmonic P.
GaussPoly generalized_spherical(const GaussPoly& P, unsigned k);

// Product-family analogue. P must have a pure bidegree (p_i, q_i) on each
// block; with per-block (pp_i, qq_i) swapped the same way by the sign of
// lambda:
//   theta(P) psi_{m1,m2} = pi^{-n} (2|lambda|)^n P
//       prod_i (-1)^{q_i} (2|lambda|)^{p_i+q_i}
//              L_{m_i - pp_i}^{n_i+p_i+q_i-1}(2|lambda| |z^i|^2)
//       e^{-|lambda| |z|^2},
// and zero when pp_i > m_i for some block. P must be harmonic in each block.
GaussPoly generalized_spherical_product(const GaussPoly& P, const Family& fam,
                                        unsigned m1, unsigned m2);

// Column-summed squared norm of the generalized spherical functions: for the
// weighted column {B_j, r_j} of bidegree (p,q),
//   sum_j r_j || theta(B_j) psi_k ||_{L^2}^2
//     = pi^{-n} (2|lambda|)^{n+p+q} (k+n+qq-1)! / ((n-1)! (k-pp)!),
// zero when pp > k.
PiScalar spherical_norm_scalar(const WeylContext& ctx, unsigned p, unsigned q,
                               unsigned k);

// Product-family analogue with per-block factorial ratios:
//   pi^{-n} (2|lambda|)^{n+p1+q1+p2+q2}
//     prod_i (m_i+n_i+qq_i-1)! / ((n_i-1)! (m_i-pp_i)!),
// zero when pp_i > m_i for some block.
PiScalar spherical_norm_scalar_product(const WeylContext& ctx,
                                       const Family& fam, unsigned m1,
                                       unsigned m2, unsigned p1, unsigned q1,
                                       unsigned p2, unsigned q2);

// Spherical expansion components f x psi_k for k = 0..kmax (full unitary
// family). Requires f of the form (polynomial) e^{-|lambda| |z|^2}.
std::vector<GaussPoly> spherical_components(const GaussPoly& f, unsigned kmax);

// Sum of the components. The expansion terminates: once kmax reaches the
// largest z- or zbar-degree of the polynomial part, the sum equals f exactly.
GaussPoly spherical_expansion_sum(const GaussPoly& f, unsigned kmax);

} // namespace hh
