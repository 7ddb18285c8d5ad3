#pragma once

#include <string>

#include "hh/rational.hpp"

namespace hh {

// Fixed representation parameters: dimension n of C^n and the nonzero
// rational parameter lambda. Every object tied to a context refuses to mix
// with objects from a different one.
struct WeylContext {
    int n = 1;
    Rat lambda = Rat(1);

    WeylContext() = default;
    WeylContext(int n_, Rat lambda_) : n(n_), lambda(std::move(lambda_)) {
        if (n <= 0) throw domain_error("WeylContext: n must be positive");
        if (lambda == 0) throw domain_error("WeylContext: lambda must be nonzero");
    }

    Rat abs_lambda() const { return lambda > 0 ? lambda : Rat(-lambda); }
    int lambda_sign() const { return lambda > 0 ? 1 : -1; }
    Rat two_abs_lambda() const { return Rat(2) * abs_lambda(); }

    friend bool operator==(const WeylContext& a, const WeylContext& b) {
        return a.n == b.n && a.lambda == b.lambda;
    }
    friend bool operator!=(const WeylContext& a, const WeylContext& b) {
        return !(a == b);
    }
};

inline void require_same_context(const WeylContext& a, const WeylContext& b,
                                 const char* where) {
    if (a != b)
        throw context_error(std::string(where) + ": mixed contexts (n=" +
                            std::to_string(a.n) + ",lambda=" + a.lambda.get_str() +
                            ") vs (n=" + std::to_string(b.n) +
                            ",lambda=" + b.lambda.get_str() + ")");
}

// K-type selector for the spherical layer: the full unitary group U(n), or a
// two-block product U(n1) x U(n2) acting on C^{n1} x C^{n2}.
struct Family {
    enum Kind { full_unitary, product } kind = full_unitary;
    int n1 = 0, n2 = 0; // used when kind == product

    static Family un() { return Family{full_unitary, 0, 0}; }
    static Family prod(int n1_, int n2_) {
        if (n1_ <= 0 || n2_ <= 0)
            throw domain_error("Family: product blocks must be positive");
        return Family{product, n1_, n2_};
    }

    int total_n() const { return kind == product ? n1 + n2 : 0; }

    void check_against(const WeylContext& ctx) const {
        if (kind == product && ctx.n != n1 + n2)
            throw context_error("Family: block sizes do not sum to context n");
    }

    friend bool operator==(const Family& a, const Family& b) {
        return a.kind == b.kind && a.n1 == b.n1 && a.n2 == b.n2;
    }
};

} // namespace hh
