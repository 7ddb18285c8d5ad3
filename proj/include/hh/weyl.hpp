#pragma once

#include <vector>

#include "hh/fock.hpp"
#include "hh/gauss_poly.hpp"

namespace hh {

// Matrix element of the displacement family in the monomial basis,
//   me(nu, mu)(z) = <V_z w^nu, w^mu> = g_mu * [w^mu](V_z w^nu),
// an exact gaussian polynomial with decay parameter |lambda|. Closed forms:
//   lambda > 0: g_mu sum_{s<=min(nu,mu)} C(nu,s) zbar^{nu-s} (-2lambda z)^{mu-s}/(mu-s)! e^{-lambda|z|^2}
//   lambda < 0: g_mu sum_{s<=min(nu,mu)} C(nu,s) (-z)^{nu-s} (2|lambda| zbar)^{mu-s}/(mu-s)! e^{-|lambda||z|^2}
GaussPoly displacement_me(const WeylContext& ctx, const MIdx& nu, const MIdx& mu);

// Weyl transform restricted to the truncation:
//   G(f)_{mu,nu} = (1/g_mu) int f(z) me(nu, mu)(z) dz.
// Each term of f populates a single band mu - nu = const, so the cost is
// O(#terms * dim * #sigma). Requires matching contexts.
OperatorMatrix weyl_transform(const GaussPoly& f, const FockPtr& fock);

// Inversion:  f(z) = pi^{-n} (2|lambda|)^n sum_{mu,nu} (1/g_nu) S_{mu,nu} conj(me(nu,mu)(z)).
// Left-inverts weyl_transform on functions whose transform is supported in
// the truncation.
GaussPoly inverse_weyl(const OperatorMatrix& S);

// Partial inversion over a chosen set of columns (no leading constant):
//   f = sum_{nu in cols} (1/g_nu) sum_mu S_{mu,nu} conj(me(nu,mu)).
// Used to manufacture eigenfunctions from operators supported on an
// eigenspace block.
GaussPoly eigenfunction_from_operator(const OperatorMatrix& S,
                                      const std::vector<std::size_t>& cols);

// Fock-side lift of a bare polynomial p (gauss_t must be 0): for each
// monomial c zeta^rho zetabar^gamma,
//   tau1 contributes c Wbar^gamma W^rho,
//   tau2 contributes c W^rho Wbar^gamma,
// and tau is their average; the halves agree on harmonic p. Satisfies
// G(theta_i(p) f) = tau_i(p) G(f) on exact columns. Caution: entries in
// column nu are exact only when |nu| + deg_conj(p) <= cutoff (tau2 raises
// before lowering, so intermediate truncation can hit otherwise).
OperatorMatrix tau1(const GaussPoly& p, const FockPtr& fock);
OperatorMatrix tau2(const GaussPoly& p, const FockPtr& fock);
OperatorMatrix tau(const GaussPoly& p, const FockPtr& fock);

// Pullback by a unitary: (k . f)(z) = f(k^{-1} z), computed by the exact
// substitution z_j -> sum_l conj(U_{lj}) z_l. Throws unless U is unitary.
GaussPoly rotate_gausspoly(const GaussPoly& f, const CMatrix& U);

} // namespace hh
