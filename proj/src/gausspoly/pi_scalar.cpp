#include "hh/pi_scalar.hpp"

#include <cmath>

namespace hh {

PiScalar PiScalar::from(CRat c) {
    PiScalar s;
    if (!c.is_zero()) s.terms_.emplace(0, std::move(c));
    return s;
}

PiScalar PiScalar::pi_pow(int e, CRat c) {
    PiScalar s;
    if (!c.is_zero()) s.terms_.emplace(e, std::move(c));
    return s;
}

bool PiScalar::is_rational() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return e == 0 && c.is_real();
}

Rat PiScalar::as_rat() const {
    if (terms_.empty()) return Rat(0);
    if (!is_rational()) throw domain_error("PiScalar: not a plain rational");
    return terms_.begin()->second.re;
}

void PiScalar::add_term(int e, const CRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PiScalar PiScalar::operator-() const {
    PiScalar s;
    for (const auto& [e, c] : terms_) s.terms_.emplace(e, -c);
    return s;
}

PiScalar& PiScalar::operator+=(const PiScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

PiScalar& PiScalar::operator-=(const PiScalar& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

PiScalar operator*(const PiScalar& a, const PiScalar& b) {
    PiScalar out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
    return out;
}

PiScalar& PiScalar::operator*=(const PiScalar& o) {
    *this = *this * o;
    return *this;
}

PiScalar& PiScalar::scale(const CRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

PiScalar PiScalar::conj() const {
    PiScalar s;
    for (const auto& [e, c] : terms_) s.terms_.emplace(e, c.conj());
    return s;
}

PiScalar PiScalar::mul_pi(int e) const {
    PiScalar s;
    for (const auto& [k, c] : terms_) s.terms_.emplace(k + e, c);
    return s;
}

PiScalar PiScalar::pow_int(unsigned e) const {
    PiScalar out = one();
    PiScalar base = *this;
    while (e) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

PiScalar PiScalar::divide_exact(const PiScalar& d) const {
    if (d.is_zero()) throw domain_error("PiScalar: division by zero");
    if (!d.is_single_term())
        throw domain_error("PiScalar: exact division requires a single-term divisor");
    const auto& [de, dc] = *d.terms_.begin();
    PiScalar out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e - de, c / dc);
    return out;
}

std::complex<double> PiScalar::eval() const {
    constexpr long double PI_L = 3.14159265358979323846264338327950288L;
    std::complex<long double> acc(0.0L, 0.0L);
    for (const auto& [e, c] : terms_) {
        long double p = powl(PI_L, static_cast<long double>(e));
        acc += std::complex<long double>(
            static_cast<long double>(c.re.get_d()) * p,
            static_cast<long double>(c.im.get_d()) * p);
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

namespace {

std::string pi_str(int e) {
    if (e == 1) return "pi";
    return "pi^" + std::to_string(e);
}

// One term c*pi^e, rendered compactly; real and pure-imaginary coefficients
// fold the denominator after the pi power ("pi/2", "-3*i*pi^2/4").
std::string term_str(int e, const CRat& c) {
    if (e == 0) {
        if (c.is_real() || c.re == 0) return crat_to_string(c);
        return "(" + crat_to_string(c) + ")";
    }
    if (c.is_real() || c.re == 0) {
        const Rat& q = c.is_real() ? c.re : c.im;
        Int num = q.get_num(), den = q.get_den();
        std::string s;
        if (num == -1) s = "-";
        else if (num != 1) s = num.get_str() + "*";
        if (!c.is_real()) s += "i*";
        s += pi_str(e);
        if (den != 1) s += "/" + den.get_str();
        return s;
    }
    return "(" + crat_to_string(c) + ")*" + pi_str(e);
}

} // namespace

std::string PiScalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string t = term_str(e, c);
        if (first) {
            out = t;
            first = false;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

} // namespace hh
