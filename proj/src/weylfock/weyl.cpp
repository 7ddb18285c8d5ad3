#include "hh/weyl.hpp"

#include <string>
#include <utility>

namespace hh {

namespace {

// Odometer over all sigma with 0 <= sigma <= cap (componentwise).
// Calls fn(sigma) for each value.
template <typename Fn>
void for_each_below(const MIdx& cap, Fn&& fn) {
    MIdx sigma(cap.size(), 0);
    while (true) {
        fn(sigma);
        std::size_t j = 0;
        while (j < cap.size() && sigma[j] == cap[j]) {
            sigma[j] = 0;
            ++j;
        }
        if (j == cap.size()) return;
        ++sigma[j];
    }
}

MIdx mi_min(const MIdx& a, const MIdx& b) {
    MIdx r(a.size());
    for (std::size_t j = 0; j < a.size(); ++j) r[j] = std::min(a[j], b[j]);
    return r;
}

Rat gram_weight(const WeylContext& ctx, const MIdx& nu) {
    return Rat(mi_factorial(nu)) / rat_pow(ctx.two_abs_lambda(), mi_degree(nu));
}

int sign_pow(uint32_t k) { return (k % 2 == 0) ? 1 : -1; }

} // namespace

GaussPoly displacement_me(const WeylContext& ctx, const MIdx& nu, const MIdx& mu) {
    std::size_t n = static_cast<std::size_t>(ctx.n);
    if (nu.size() != n || mu.size() != n)
        throw domain_error("displacement_me: index length does not match n");
    bool pos = ctx.lambda_sign() > 0;
    Rat two_lam = ctx.two_abs_lambda();
    Rat g_mu = gram_weight(ctx, mu);

    GaussPoly out(ctx, ctx.abs_lambda());
    for_each_below(mi_min(nu, mu), [&](const MIdx& s) {
        MIdx dmu = mi_sub(mu, s);
        MIdx dnu = mi_sub(nu, s);
        Rat c = g_mu * Rat(mi_binomial(nu, s)) *
                rat_pow(two_lam, mi_degree(dmu)) / Rat(mi_factorial(dmu));
        MIdx a, b;
        if (pos) {
            c *= sign_pow(mi_degree(dmu));
            a = dmu;  // z powers
            b = dnu;  // zbar powers
        } else {
            c *= sign_pow(mi_degree(dnu));
            a = dnu;
            b = dmu;
        }
        out.add_term(a, b, PiScalar::from_rat(c));
    });
    return out;
}

OperatorMatrix weyl_transform(const GaussPoly& f, const FockPtr& fock) {
    const WeylContext& ctx = fock->context();
    require_same_context(f.context(), ctx, "weyl_transform");
    std::size_t n = static_cast<std::size_t>(ctx.n);
    bool pos = ctx.lambda_sign() > 0;
    Rat u = f.gauss_t() + ctx.abs_lambda(); // total gaussian decay, > 0
    Rat two_lam = ctx.two_abs_lambda();

    OperatorMatrix S(fock);
    for (const auto& [key, coeff] : f.terms()) {
        const MIdx& a = key.a;
        const MIdx& b = key.b;
        // The term z^a zbar^b populates the single band mu = nu + shift.
        std::vector<long> shift(n);
        for (std::size_t j = 0; j < n; ++j)
            shift[j] = pos ? long(b[j]) - long(a[j]) : long(a[j]) - long(b[j]);

        for (std::size_t col = 0; col < fock->dim(); ++col) {
            const MIdx& nu = fock->index(col);
            MIdx mu(n);
            bool ok = true;
            for (std::size_t j = 0; j < n; ++j) {
                long v = long(nu[j]) + shift[j];
                if (v < 0) {
                    ok = false;
                    break;
                }
                mu[j] = static_cast<uint32_t>(v);
            }
            if (!ok || !fock->contains(mu)) continue;

            Rat acc(0);
            for_each_below(mi_min(nu, mu), [&](const MIdx& s) {
                MIdx dmu = mi_sub(mu, s);
                MIdx dnu = mi_sub(nu, s);
                // me coefficient with the 1/g_mu prefactor already cancelled.
                Rat c = Rat(mi_binomial(nu, s)) *
                        rat_pow(two_lam, mi_degree(dmu)) / Rat(mi_factorial(dmu));
                c *= sign_pow(pos ? mi_degree(dmu) : mi_degree(dnu));
                // Balanced gaussian moment of the combined monomial.
                MIdx total = pos ? mi_add(a, dmu) : mi_add(a, dnu);
                c *= Rat(mi_factorial(total)) /
                     rat_pow(u, mi_degree(total) + uint32_t(n));
                acc += c;
            });
            if (acc != 0)
                S.at(fock->position(mu), col) +=
                    coeff * PiScalar::pi_pow(int(n), CRat(acc));
        }
    }
    return S;
}

namespace {

GaussPoly accumulate_inverse(const OperatorMatrix& S,
                             const std::vector<std::size_t>& cols,
                             const PiScalar& prefactor) {
    const FockTruncation& fock = S.fock();
    const WeylContext& ctx = fock.context();
    GaussPoly out(ctx, ctx.abs_lambda());
    for (std::size_t col : cols) {
        PiScalar col_scale =
            prefactor * PiScalar::from_rat(Rat(1) / fock.gram(col));
        for (std::size_t mu = 0; mu < fock.dim(); ++mu) {
            const PiScalar& s = S.at(mu, col);
            if (s.is_zero()) continue;
            GaussPoly me =
                displacement_me(ctx, fock.index(col), fock.index(mu)).conj();
            out += me.scale(col_scale * s);
        }
    }
    return out;
}

} // namespace

GaussPoly inverse_weyl(const OperatorMatrix& S) {
    const FockTruncation& fock = S.fock();
    const WeylContext& ctx = fock.context();
    std::vector<std::size_t> cols(fock.dim());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    PiScalar cst =
        PiScalar::pi_pow(-ctx.n, CRat(rat_pow(ctx.two_abs_lambda(), ctx.n)));
    return accumulate_inverse(S, cols, cst);
}

GaussPoly eigenfunction_from_operator(const OperatorMatrix& S,
                                      const std::vector<std::size_t>& cols) {
    for (std::size_t c : cols)
        if (c >= S.dim())
            throw domain_error("eigenfunction_from_operator: column out of range");
    return accumulate_inverse(S, cols, PiScalar::one());
}

namespace {

enum class TauOrder { wbar_then_w, w_then_wbar };

OperatorMatrix tau_impl(const GaussPoly& p, const FockPtr& fock, TauOrder order) {
    const WeylContext& ctx = fock->context();
    require_same_context(p.context(), ctx, "tau");
    if (!p.is_polynomial())
        throw domain_error("tau: argument must be a bare polynomial (gauss_t = 0)");

    std::size_t n = static_cast<std::size_t>(ctx.n);
    std::vector<OperatorMatrix> W, Wbar;
    for (std::size_t j = 0; j < n; ++j) {
        W.push_back(ladder_W(fock, int(j)));
        Wbar.push_back(ladder_Wbar(fock, int(j)));
    }

    OperatorMatrix acc(fock);
    for (const auto& [key, coeff] : p.terms()) {
        const MIdx& rho = key.a;
        const MIdx& gamma = key.b;
        auto power_product = [&](const std::vector<OperatorMatrix>& base,
                                 const MIdx& e, OperatorMatrix m) {
            for (std::size_t j = 0; j < n; ++j)
                for (uint32_t r = 0; r < e[j]; ++r) m = base[j] * m;
            return m;
        };
        OperatorMatrix word = OperatorMatrix::identity(fock);
        if (order == TauOrder::wbar_then_w) {
            word = power_product(W, rho, std::move(word));
            word = power_product(Wbar, gamma, std::move(word));
        } else {
            word = power_product(Wbar, gamma, std::move(word));
            word = power_product(W, rho, std::move(word));
        }
        acc += word.scale(coeff);
    }
    return acc;
}

} // namespace

OperatorMatrix tau1(const GaussPoly& p, const FockPtr& fock) {
    return tau_impl(p, fock, TauOrder::wbar_then_w);
}

OperatorMatrix tau2(const GaussPoly& p, const FockPtr& fock) {
    return tau_impl(p, fock, TauOrder::w_then_wbar);
}

OperatorMatrix tau(const GaussPoly& p, const FockPtr& fock) {
    OperatorMatrix m = tau1(p, fock) + tau2(p, fock);
    return m.scale(PiScalar::from_rat(make_rat(1, 2)));
}

GaussPoly rotate_gausspoly(const GaussPoly& f, const CMatrix& U) {
    const WeylContext& ctx = f.context();
    std::size_t n = static_cast<std::size_t>(ctx.n);
    if (U.size() != n)
        throw domain_error("rotate_gausspoly: matrix size does not match n");
    if (!is_unitary(U))
        throw domain_error("rotate_gausspoly: matrix is not unitary");

    // Expand prod_j (sum_l M_{lj} x_l)^{e_j} over exact complex rationals.
    auto expand = [&](const MIdx& e, bool conjugate) {
        std::map<MIdx, CRat> poly;
        poly.emplace(mi_zero(n), CRat(Rat(1)));
        for (std::size_t j = 0; j < n; ++j) {
            for (uint32_t rep = 0; rep < e[j]; ++rep) {
                std::map<MIdx, CRat> next;
                for (const auto& [mono, c] : poly) {
                    for (std::size_t l = 0; l < n; ++l) {
                        CRat m = conjugate ? U[l][j].conj() : U[l][j];
                        if (m.is_zero()) continue;
                        MIdx up = mi_add(mono, mi_unit(n, l));
                        auto [it, fresh] = next.emplace(up, c * m);
                        if (!fresh) it->second = it->second + c * m;
                    }
                }
                poly = std::move(next);
            }
        }
        return poly;
    };

    GaussPoly out(ctx, f.gauss_t());
    for (const auto& [key, coeff] : f.terms()) {
        auto zpart = expand(key.a, /*conjugate=*/true);  // z_j -> sum conj(U_{lj}) z_l
        auto bpart = expand(key.b, /*conjugate=*/false); // zbar_j -> sum U_{lj} zbar_l
        for (const auto& [za, zc] : zpart)
            for (const auto& [bb, bc] : bpart) {
                CRat c = zc * bc;
                if (c.is_zero()) continue;
                out.add_term(za, bb, coeff * c);
            }
    }
    return out;
}

} // namespace hh
