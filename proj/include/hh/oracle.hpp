#pragma once

#include <complex>
#include <vector>

#include "hh/fock.hpp"
#include "hh/gauss_poly.hpp"

namespace hh {

// Floating-point cross-check routes. Everything in this header is an
// independent numerical recomputation of quantities the library produces
// exactly; nothing here feeds back into the exact path.

// Gauss-Hermite rule of order m for the weight e^{-x^2} on the real line:
// integral f(x) e^{-x^2} dx = sum_i w[i] f(x[i]), exact for polynomial f of
// degree <= 2m-1.
struct GaussHermite {
    std::vector<double> x, w;
};
GaussHermite gauss_hermite(unsigned m);

// Numerical integral over C^n of an exact Gaussian polynomial, by the tensor
// Gauss-Hermite rule in the 2n real coordinates, at an order exact for the
// polynomial degree. Requires gauss_t > 0 for nonzero input.
std::complex<double> integrate_oracle(const GaussPoly& f);

// Numerical  integral f conj(g)  via the same quadrature.
std::complex<double> l2_inner_oracle(const GaussPoly& f, const GaussPoly& g);

// Dense complex matrix over the monomial basis of a truncation.
using DMat = std::vector<std::vector<std::complex<double>>>;

// Matrix exponential by scaling-and-squaring with a Taylor core.
DMat matrix_exp(DMat A);

// One-parameter-group route to the displacement family: exponentiates the
// ladder generator at the point z. Entry [mu][nu] approximates the w^mu
// coefficient of the displaced monomial w^nu; trustworthy away from the
// truncation boundary (the generator moves degree by one per order).
DMat displacement_oracle(const FockPtr& fock,
                         const std::vector<std::complex<double>>& z);

// Exact integral of a type-zero Laguerre polynomial against its weight:
// integral_0^inf L_k(s) e^{-s} ds, which telescopes to [k == 0]. Independent
// route for the coefficient table of the radial Gaussian.
Rat laguerre_exp_integral(unsigned k);

} // namespace hh
