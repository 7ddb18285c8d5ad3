#include "hh/rational.hpp"

#include <cstdlib>

namespace hh {

unsigned max_degree() {
    static const unsigned cap = [] {
        if (const char* s = std::getenv("HH_MAX_DEGREE")) {
            long v = std::strtol(s, nullptr, 10);
            if (v > 0) return static_cast<unsigned>(v);
        }
        return 64u;
    }();
    return cap;
}

Rat make_rat(long num, long den) {
    if (den == 0) throw domain_error("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw serialization_error("bad rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw serialization_error("zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rat& q) { return q.get_str(); }

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    if (q == 0 && e < 0) throw domain_error("rat_pow: negative power of zero");
    Rat base = e > 0 ? q : Rat(1) / q;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat out(1);
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

Int factorial(unsigned long k) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int gamma_int(unsigned long a) {
    if (a == 0) throw domain_error("gamma_int: pole at 0");
    return factorial(a - 1);
}

CRat& CRat::operator+=(const CRat& o) {
    re += o.re;
    im += o.im;
    return *this;
}

CRat& CRat::operator-=(const CRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

CRat& CRat::operator*=(const CRat& o) {
    Rat r = re * o.re - im * o.im;
    Rat i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

CRat& CRat::operator/=(const CRat& o) {
    Rat n2 = o.norm2();
    if (n2 == 0) throw domain_error("CRat: division by zero");
    Rat r = (re * o.re + im * o.im) / n2;
    Rat i = (im * o.re - re * o.im) / n2;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string crat_to_string(const CRat& c) {
    if (c.is_zero()) return "0";
    if (c.im == 0) return c.re.get_str();
    std::string im_part = (c.im == 1)    ? "i"
                          : (c.im == -1) ? "-i"
                                         : c.im.get_str() + "*i";
    if (c.re == 0) return im_part;
    if (c.im > 0) return c.re.get_str() + "+" + im_part;
    return c.re.get_str() + im_part; // im_part already carries the minus
}

} // namespace hh
