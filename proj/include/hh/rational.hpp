#pragma once

#include <gmpxx.h>

#include <string>

#include "hh/errors.hpp"

namespace hh {

using Rat = mpq_class;
using Int = mpz_class;

// mpq_class(p, q) does not canonicalize; these helpers always do.
Rat make_rat(long num, long den = 1);
Rat rat_from_string(const std::string& s);
std::string rat_to_string(const Rat& q);

// q^e for integer e (negative allowed; q must be nonzero then).
Rat rat_pow(const Rat& q, long e);

Int factorial(unsigned long k);
Int binomial(unsigned long n, unsigned long k);
// Gamma(a) for positive integer a, i.e. (a-1)!.
Int gamma_int(unsigned long a);

// Complex rational, the coefficient field for everything exact.
struct CRat {
    Rat re, im;

    CRat() : re(0), im(0) {}
    CRat(Rat r) : re(std::move(r)), im(0) {}
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static CRat unit_i() { return CRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    CRat conj() const { return CRat(re, -im); }
    Rat norm2() const { return re * re + im * im; } // |c|^2

    CRat operator-() const { return CRat(-re, -im); }
    CRat& operator+=(const CRat& o);
    CRat& operator-=(const CRat& o);
    CRat& operator*=(const CRat& o);
    CRat& operator/=(const CRat& o); // exact; throws on zero divisor

    friend CRat operator+(CRat a, const CRat& b) { return a += b; }
    friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
    friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
    friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
    friend bool operator==(const CRat& a, const CRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

std::string crat_to_string(const CRat& c);

} // namespace hh
