#include "hh/laguerre.hpp"

namespace hh {

std::vector<Rat> laguerre_coeffs(unsigned k, const Rat& alpha) {
    std::vector<Rat> prev{Rat(1)};                 // L_0
    if (k == 0) return prev;
    std::vector<Rat> cur{Rat(1) + alpha, Rat(-1)}; // L_1
    for (unsigned m = 2; m <= k; ++m) {
        std::vector<Rat> next(m + 1, Rat(0));
        Rat a = (Rat(2 * static_cast<long>(m) - 1) + alpha) / Rat(static_cast<long>(m));
        Rat b = (Rat(static_cast<long>(m) - 1) + alpha) / Rat(static_cast<long>(m));
        Rat c = Rat(1) / Rat(static_cast<long>(m));
        for (unsigned i = 0; i < cur.size(); ++i) {
            next[i] += a * cur[i];
            next[i + 1] -= c * cur[i];
        }
        for (unsigned i = 0; i < prev.size(); ++i) next[i] -= b * prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Rat laguerre_eval(unsigned k, const Rat& alpha, const Rat& x) {
    auto c = laguerre_coeffs(k, alpha);
    Rat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

GaussPoly radial_power(const WeylContext& ctx, unsigned p, int lo, int hi) {
    if (lo < 0 || hi > ctx.n || lo >= hi)
        throw domain_error("radial_power: bad coordinate block");
    GaussPoly out(ctx, Rat(0));
    std::size_t width = static_cast<std::size_t>(hi - lo);
    Int pfac = factorial(p);
    for (const auto& m : mi_all_of_degree(width, p)) {
        Rat w(pfac / mi_factorial(m));
        MIdx full = mi_zero(ctx.n);
        for (std::size_t j = 0; j < width; ++j) full[lo + j] = m[j];
        out.add_term(full, full, PiScalar::from_rat(w));
    }
    return out;
}

GaussPoly laguerre_radial(const WeylContext& ctx, unsigned k, const Rat& alpha,
                          const Rat& scale, int lo, int hi) {
    auto coeffs = laguerre_coeffs(k, alpha);
    GaussPoly out(ctx, Rat(0));
    for (unsigned i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        GaussPoly term = radial_power(ctx, i, lo, hi);
        term.scale(PiScalar::from_rat(coeffs[i] * rat_pow(scale, i)));
        out += term;
    }
    return out;
}

} // namespace hh
