#pragma once

#include <vector>

#include "hh/gauss_poly.hpp"

namespace hh {

// sum_j d^2 f / dz_j dzbar_j  (the bigraded laplacian).
GaussPoly laplacian_zz(const GaussPoly& f);

// dim H_{p,q}(C^n): bidegree-(p,q) polynomials killed by laplacian_zz.
unsigned harmonic_dim(int n, unsigned p, unsigned q);

// Deterministic rational basis of H_{p,q}(C^n): exact nullspace of the
// laplacian on the bidegree-(p,q) monomial span, monomials in graded-lex
// order, reduced row echelon form, one vector per free column.
std::vector<GaussPoly> harmonic_basis(const WeylContext& ctx, unsigned p, unsigned q);

// f = sum_pieces |z|^{2k} h  with h in H_{p,q}; input must be a bare
// polynomial. Pieces are sorted by (p, q, k).
struct HarmonicPiece {
    unsigned p, q, k;
    GaussPoly h;
};
std::vector<HarmonicPiece> harmonic_decompose(const GaussPoly& f);

// The H_{p,q}-isotypic part of f: sum of |z|^{2k} h over pieces with the
// given bidegree.
GaussPoly component_project(const GaussPoly& f, unsigned p, unsigned q);

// Unnormalized surface measure on S^{2n-1}.
//   sphere_total(n)        = |S^{2n-1}| = 2 pi^n / (n-1)!
//   sphere_moment(n, A, B) = int omega^A omegabar^B = [A==B] 2 pi^n A!/(n-1+|A|)!
PiScalar sphere_total(int n);
PiScalar sphere_moment(int n, const MIdx& A, const MIdx& B);
// int_S f conj(g) for bare polynomials over the context sphere.
PiScalar sphere_inner(const GaussPoly& f, const GaussPoly& g);

// Sphere-orthogonal basis {B_j} of H_{p,q} with rational weights r_j such
// that sum_j r_j B_j(z) conj(B_j)(z) = |z|^{2(p+q)} exactly:
//   r_j = |S^{2n-1}| / (dim * ||B_j||_S^2).
struct HarmonicColumn {
    std::vector<GaussPoly> basis;
    std::vector<Rat> weights;
};
HarmonicColumn harmonic_column(const WeylContext& ctx, unsigned p, unsigned q);

// Product-family versions: harmonics in the variables of one block
// (0 or 1), constant in the other, embedded into the full context.
std::vector<GaussPoly> harmonic_basis_block(const WeylContext& ctx,
                                            const Family& fam, int block,
                                            unsigned p, unsigned q);
HarmonicColumn harmonic_column_block(const WeylContext& ctx, const Family& fam,
                                     int block, unsigned p, unsigned q);
// Tensor column: basis {B1_j B2_l}, weights {r1_j r2_l}, so the weighted
// square-sum is |z^1|^{2(p1+q1)} |z^2|^{2(p2+q2)}.
HarmonicColumn harmonic_column_product(const WeylContext& ctx, const Family& fam,
                                       unsigned p1, unsigned q1, unsigned p2,
                                       unsigned q2);

} // namespace hh
