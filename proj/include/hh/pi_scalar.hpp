#pragma once

#include <complex>
#include <map>
#include <string>

#include "hh/rational.hpp"

namespace hh {

// Laurent polynomial in pi with complex-rational coefficients:
//   sum_e c_e * pi^e,  c_e in Q(i),  e in Z.
// The exact scalar type of the library. Zero coefficients are never stored,
// so equality is structural.
class PiScalar {
public:
    PiScalar() = default; // zero

    static PiScalar zero() { return {}; }
    static PiScalar one() { return from(CRat(Rat(1))); }
    static PiScalar unit_i() { return from(CRat::unit_i()); }
    static PiScalar from(CRat c);
    static PiScalar from_rat(Rat q) { return from(CRat(std::move(q))); }
    static PiScalar from_int(long v) { return from(CRat(Rat(v))); }
    // c * pi^e
    static PiScalar pi_pow(int e, CRat c = CRat(Rat(1)));

    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }
    // True iff a plain rational (single pi^0 real term, or zero).
    bool is_rational() const;
    Rat as_rat() const; // valid when is_rational()

    const std::map<int, CRat>& terms() const { return terms_; }

    PiScalar operator-() const;
    PiScalar& operator+=(const PiScalar& o);
    PiScalar& operator-=(const PiScalar& o);
    PiScalar& operator*=(const PiScalar& o);

    friend PiScalar operator+(PiScalar a, const PiScalar& b) { return a += b; }
    friend PiScalar operator-(PiScalar a, const PiScalar& b) { return a -= b; }
    friend PiScalar operator*(const PiScalar& a, const PiScalar& b);

    PiScalar& scale(const CRat& c);
    friend PiScalar operator*(PiScalar a, const CRat& c) { return a.scale(c); }
    friend PiScalar operator*(const CRat& c, PiScalar a) { return a.scale(c); }

    PiScalar conj() const;
    PiScalar mul_pi(int e) const; // * pi^e
    PiScalar pow_int(unsigned e) const;

    // Exact division; the divisor must be a single term c*pi^e.
    PiScalar divide_exact(const PiScalar& d) const;

    std::complex<double> eval() const;

    // Compact deterministic rendering, e.g. "pi/2", "-3*pi^2/4", "0".
    std::string str() const;

    friend bool operator==(const PiScalar& a, const PiScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const PiScalar& a, const PiScalar& b) {
        return !(a == b);
    }

private:
    std::map<int, CRat> terms_;

    void add_term(int e, const CRat& c);
};

} // namespace hh
