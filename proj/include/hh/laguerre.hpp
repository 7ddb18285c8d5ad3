#pragma once

#include <vector>

#include "hh/gauss_poly.hpp"

namespace hh {

// Coefficients of the generalized Laguerre polynomial L_k^alpha in x^0..x^k,
// from the exact three-term recurrence
//   k L_k^a = (2k-1+a-x) L_{k-1}^a - (k-1+a) L_{k-2}^a.
std::vector<Rat> laguerre_coeffs(unsigned k, const Rat& alpha);

Rat laguerre_eval(unsigned k, const Rat& alpha, const Rat& x);

// L_k^alpha(scale * (|z_lo|^2 + ... + |z_{hi-1}|^2)) as a bare polynomial
// over ctx (coordinates outside [lo, hi) untouched).
GaussPoly laguerre_radial(const WeylContext& ctx, unsigned k, const Rat& alpha,
                          const Rat& scale, int lo, int hi);

// (|z_lo|^2 + ... + |z_{hi-1}|^2)^p as a bare polynomial over ctx.
GaussPoly radial_power(const WeylContext& ctx, unsigned p, int lo, int hi);

} // namespace hh
