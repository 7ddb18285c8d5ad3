#pragma once

#include <complex>
#include <vector>

#include "hh/context.hpp"

namespace hh {

// Bessel function J_0 by its ascending power series, accumulated in long
// double. Accurate to ~1e-12 absolute for |x| up to ~20; intended as the
// series route checked against the quadrature route in eta_omega.
double bessel_j0(double x);

// Confluent limit series 0F1(; b; x) = sum_k x^k / ((b)_k k!), b > 0,
// accumulated in long double. J_0(x) = 0F1(; 1; -x^2/4); the unit-sphere
// average of a plane wave over C^m is 0F1(; m; -c^2/4).
double hyp0f1(double b, double x);

// Group-averaged plane wave over the linear symmetry group:
//   eta_omega(z) = integral over K of exp(i Re<omega, k z>) dk,
// with <u, v> = sum_j u_j conj(v_j) and Haar probability measure.
//
// Evaluated by quadrature on the orbit: the full unitary family reduces
// exactly (transitivity on spheres) to the average over the unit sphere of
// the first coordinate, whose squared modulus is Beta(1, m-1)-distributed
// with uniform phase; each factor of a product family averages its own
// block. One-dimensional blocks use the N-point rectangle rule on the full
// circle (geometric convergence), radial parts use doubling Simpson.
// Accurate to ~1e-9 or better.
//
// Throws domain_error on empty or mismatched vectors, or when the product
// family block sizes do not match the vector length.
std::complex<double> eta_omega(const Family& fam,
                               const std::vector<std::complex<double>>& omega,
                               const std::vector<std::complex<double>>& z);

} // namespace hh
