#include "hh/gauss_poly.hpp"

#include <cmath>

namespace hh {

GaussPoly::GaussPoly(WeylContext ctx, Rat gauss_t)
    : ctx_(std::move(ctx)), t_(std::move(gauss_t)) {
    if (t_ < 0) throw domain_error("GaussPoly: gauss_t must be >= 0");
}

GaussPoly GaussPoly::constant(const WeylContext& ctx, Rat t, PiScalar c) {
    GaussPoly f(ctx, std::move(t));
    f.add_term(mi_zero(ctx.n), mi_zero(ctx.n), c);
    return f;
}

GaussPoly GaussPoly::monomial(const WeylContext& ctx, Rat t, MIdx a, MIdx b,
                              PiScalar c) {
    GaussPoly f(ctx, std::move(t));
    f.add_term(a, b, c);
    return f;
}

void GaussPoly::check_key(const MIdx& a, const MIdx& b) const {
    if (a.size() != static_cast<std::size_t>(ctx_.n) ||
        b.size() != static_cast<std::size_t>(ctx_.n))
        throw domain_error("GaussPoly: multi-index length does not match n");
}

uint32_t GaussPoly::degree() const {
    if (terms_.empty()) return 0;
    const TermKey& k = terms_.rbegin()->first;
    return mi_degree(k.a) + mi_degree(k.b);
}

PiScalar GaussPoly::coeff(const MIdx& a, const MIdx& b) const {
    auto it = terms_.find(TermKey{a, b});
    return it == terms_.end() ? PiScalar::zero() : it->second;
}

void GaussPoly::add_term(const MIdx& a, const MIdx& b, const PiScalar& c) {
    check_key(a, b);
    if (c.is_zero()) return;
    TermKey key{a, b};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussPoly GaussPoly::operator-() const {
    GaussPoly out(ctx_, t_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

GaussPoly& GaussPoly::operator+=(const GaussPoly& o) {
    require_same_context(ctx_, o.ctx_, "GaussPoly::add");
    if (t_ != o.t_)
        throw context_error("GaussPoly::add: mismatched gauss_t (" + t_.get_str() +
                            " vs " + o.t_.get_str() + ")");
    for (const auto& [k, c] : o.terms_) add_term(k.a, k.b, c);
    return *this;
}

GaussPoly& GaussPoly::operator-=(const GaussPoly& o) {
    require_same_context(ctx_, o.ctx_, "GaussPoly::sub");
    if (t_ != o.t_)
        throw context_error("GaussPoly::sub: mismatched gauss_t");
    for (const auto& [k, c] : o.terms_) add_term(k.a, k.b, -c);
    return *this;
}

GaussPoly operator*(const GaussPoly& x, const GaussPoly& y) {
    require_same_context(x.ctx_, y.ctx_, "GaussPoly::mul");
    if (!x.terms_.empty() && !y.terms_.empty() &&
        x.degree() + y.degree() > max_degree())
        throw degree_error("GaussPoly::mul: degree cap exceeded");
    GaussPoly out(x.ctx_, x.t_ + y.t_);
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_)
            out.add_term(mi_add(kx.a, ky.a), mi_add(kx.b, ky.b), cx * cy);
    return out;
}

GaussPoly& GaussPoly::scale(const PiScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

GaussPoly GaussPoly::conj() const {
    GaussPoly out(ctx_, t_);
    for (const auto& [k, c] : terms_) out.add_term(k.b, k.a, c.conj());
    return out;
}

GaussPoly GaussPoly::reflect() const {
    GaussPoly out(ctx_, t_);
    for (const auto& [k, c] : terms_) {
        bool odd = (mi_degree(k.a) + mi_degree(k.b)) % 2;
        out.terms_.emplace(k, odd ? -c : c);
    }
    return out;
}

GaussPoly GaussPoly::times_gauss(const Rat& dt) const {
    Rat nt = t_ + dt;
    if (nt < 0) throw domain_error("GaussPoly::times_gauss: gauss_t would go negative");
    GaussPoly out(ctx_, nt);
    out.terms_ = terms_;
    return out;
}

GaussPoly GaussPoly::mul_z(int j) const {
    if (degree() + 1 > max_degree())
        throw degree_error("GaussPoly::mul_z: degree cap exceeded");
    GaussPoly out(ctx_, t_);
    for (const auto& [k, c] : terms_)
        out.add_term(mi_add(k.a, mi_unit(ctx_.n, j)), k.b, c);
    return out;
}

GaussPoly GaussPoly::mul_zbar(int j) const {
    if (degree() + 1 > max_degree())
        throw degree_error("GaussPoly::mul_zbar: degree cap exceeded");
    GaussPoly out(ctx_, t_);
    for (const auto& [k, c] : terms_)
        out.add_term(k.a, mi_add(k.b, mi_unit(ctx_.n, j)), c);
    return out;
}

GaussPoly GaussPoly::dz(int j) const {
    GaussPoly out(ctx_, t_);
    PiScalar mt = PiScalar::from_rat(-t_);
    for (const auto& [k, c] : terms_) {
        if (k.a[j] > 0) {
            PiScalar dc = c * CRat(Rat(static_cast<long>(k.a[j])));
            out.add_term(mi_sub(k.a, mi_unit(ctx_.n, j)), k.b, dc);
        }
        if (t_ != 0) out.add_term(k.a, mi_add(k.b, mi_unit(ctx_.n, j)), c * mt);
    }
    return out;
}

GaussPoly GaussPoly::dzbar(int j) const {
    GaussPoly out(ctx_, t_);
    PiScalar mt = PiScalar::from_rat(-t_);
    for (const auto& [k, c] : terms_) {
        if (k.b[j] > 0) {
            PiScalar dc = c * CRat(Rat(static_cast<long>(k.b[j])));
            out.add_term(k.a, mi_sub(k.b, mi_unit(ctx_.n, j)), dc);
        }
        if (t_ != 0) out.add_term(mi_add(k.a, mi_unit(ctx_.n, j)), k.b, c * mt);
    }
    return out;
}

std::complex<double> GaussPoly::evaluate(
    const std::vector<std::complex<double>>& z) const {
    if (z.size() != static_cast<std::size_t>(ctx_.n))
        throw domain_error("GaussPoly::evaluate: point dimension mismatch");
    std::complex<double> acc(0.0, 0.0);
    for (const auto& [k, c] : terms_) {
        std::complex<double> term = c.eval();
        for (int j = 0; j < ctx_.n; ++j) {
            for (uint32_t r = 0; r < k.a[j]; ++r) term *= z[j];
            for (uint32_t r = 0; r < k.b[j]; ++r) term *= std::conj(z[j]);
        }
        acc += term;
    }
    if (t_ != 0) {
        double norm2 = 0;
        for (const auto& zj : z) norm2 += std::norm(zj);
        acc *= std::exp(-t_.get_d() * norm2);
    }
    return acc;
}

PiScalar integrate(const GaussPoly& f) {
    if (f.is_zero()) return PiScalar::zero();
    const Rat& t = f.gauss_t();
    if (t == 0)
        throw domain_error("integrate: divergent (gauss_t = 0 with nonzero terms)");
    int n = f.context().n;
    PiScalar acc;
    for (const auto& [k, c] : f.terms()) {
        if (k.a != k.b) continue;
        Rat w(mi_factorial(k.a));
        w *= rat_pow(t, -static_cast<long>(mi_degree(k.a)) - n);
        acc += (c * CRat(w)).mul_pi(n);
    }
    return acc;
}

PiScalar l2_inner(const GaussPoly& f, const GaussPoly& g) {
    return integrate(f * g.conj());
}

namespace {

GaussPoly op_linear(const GaussPoly& f, int j, bool bar_side, const Rat& mult_coeff) {
    // bar_side false: d/dzbar_j + mult_coeff * z_j
    // bar_side true:  d/dz_j    + mult_coeff * zbar_j
    GaussPoly out = bar_side ? f.dz(j) : f.dzbar(j);
    GaussPoly m = bar_side ? f.mul_zbar(j) : f.mul_z(j);
    m.scale(PiScalar::from_rat(mult_coeff));
    out += m;
    return out;
}

} // namespace

GaussPoly op_L(const GaussPoly& f, int j) {
    return op_linear(f, j, false, -f.context().lambda);
}
GaussPoly op_Lbar(const GaussPoly& f, int j) {
    return op_linear(f, j, true, f.context().lambda);
}
GaussPoly op_R(const GaussPoly& f, int j) {
    return op_linear(f, j, false, f.context().lambda);
}
GaussPoly op_Rbar(const GaussPoly& f, int j) {
    return op_linear(f, j, true, -f.context().lambda);
}

GaussPoly apply_factor(const GaussPoly& f, const OpFactor& op) {
    switch (op.kind) {
        case OpFactor::dz: return f.dz(op.j);
        case OpFactor::dzbar: return f.dzbar(op.j);
        case OpFactor::mz: return f.mul_z(op.j);
        case OpFactor::mzbar: return f.mul_zbar(op.j);
        case OpFactor::L: return op_L(f, op.j);
        case OpFactor::Lbar: return op_Lbar(f, op.j);
        case OpFactor::R: return op_R(f, op.j);
        case OpFactor::Rbar: return op_Rbar(f, op.j);
    }
    throw domain_error("apply_factor: bad kind");
}

GaussPoly apply_word(const GaussPoly& f, const OpWord& w) {
    GaussPoly out = f;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out = apply_factor(out, *it);
    return out;
}

InvariantOp InvariantOp::word(OpWord w, PiScalar c) {
    InvariantOp op;
    op.add(std::move(c), std::move(w));
    return op;
}

InvariantOp& InvariantOp::add(PiScalar c, OpWord w) {
    if (!c.is_zero()) terms_.emplace_back(std::move(c), std::move(w));
    return *this;
}

InvariantOp& InvariantOp::operator+=(const InvariantOp& o) {
    for (const auto& [c, w] : o.terms_) add(c, w);
    return *this;
}

InvariantOp& InvariantOp::scale(const PiScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [tc, w] : terms_) tc *= c;
    return *this;
}

InvariantOp operator*(const InvariantOp& A, const InvariantOp& B) {
    InvariantOp out;
    for (const auto& [ca, wa] : A.terms_)
        for (const auto& [cb, wb] : B.terms_) {
            OpWord w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(ca * cb, std::move(w));
        }
    return out;
}

GaussPoly InvariantOp::apply(const GaussPoly& f) const {
    GaussPoly acc(f.context(), f.gauss_t());
    for (const auto& [c, w] : terms_) {
        GaussPoly g = apply_word(f, w);
        g.scale(c);
        acc += g;
    }
    return acc;
}

namespace {

// One theta order for a single monomial zeta^rho zetabar^gamma:
// rbar_first=true gives Rbar^gamma (-R)^rho, else (-R)^rho Rbar^gamma.
GaussPoly theta_monomial(const MIdx& rho, const MIdx& gamma, const GaussPoly& f,
                         bool rbar_last) {
    GaussPoly g = f;
    auto apply_R = [&](GaussPoly h) {
        for (std::size_t j = 0; j < rho.size(); ++j)
            for (uint32_t r = 0; r < rho[j]; ++r) h = op_R(h, static_cast<int>(j));
        if (mi_degree(rho) % 2) h.scale(PiScalar::from_int(-1));
        return h;
    };
    auto apply_Rbar = [&](GaussPoly h) {
        for (std::size_t j = 0; j < gamma.size(); ++j)
            for (uint32_t r = 0; r < gamma[j]; ++r) h = op_Rbar(h, static_cast<int>(j));
        return h;
    };
    return rbar_last ? apply_Rbar(apply_R(g)) : apply_R(apply_Rbar(g));
}

GaussPoly theta_impl(const GaussPoly& p, const GaussPoly& f, bool rbar_last) {
    if (!p.is_polynomial())
        throw domain_error("theta: p must be a bare polynomial (gauss_t = 0)");
    require_same_context(p.context(), f.context(), "theta");
    if (p.degree() + f.degree() > max_degree())
        throw degree_error("theta: degree cap exceeded");
    GaussPoly acc(f.context(), f.gauss_t());
    for (const auto& [k, c] : p.terms()) {
        GaussPoly g = theta_monomial(k.a, k.b, f, rbar_last);
        g.scale(c);
        acc += g;
    }
    return acc;
}

} // namespace

GaussPoly theta1(const GaussPoly& p, const GaussPoly& f) {
    return theta_impl(p, f, /*rbar_last=*/true);
}

GaussPoly theta2(const GaussPoly& p, const GaussPoly& f) {
    return theta_impl(p, f, /*rbar_last=*/false);
}

GaussPoly theta(const GaussPoly& p, const GaussPoly& f) {
    GaussPoly s = theta1(p, f) + theta2(p, f);
    s.scale(PiScalar::from_rat(make_rat(1, 2)));
    return s;
}

namespace {

struct CoordTerm {
    uint32_t pa, pb; // powers of z_j, zbar_j
    Rat c;
};

// The per-coordinate integral
//   T = int_C (z-w)^a (zbar-wbar)^b w^c wbar^d K(z,w) e^{-2s|w|^2} dw,
// where K = e^{2s z wbar} for lambda > 0 and K = e^{2s zbar w} for lambda < 0
// (s = |lambda|); K absorbs both the Gaussian cross terms and the twist phase.
std::vector<CoordTerm> coord_integral(uint32_t a, uint32_t b, uint32_t c,
                                      uint32_t d, const Rat& two_s, bool pos) {
    std::vector<CoordTerm> out;
    for (uint32_t i = 0; i <= a; ++i) {
        for (uint32_t k = 0; k <= b; ++k) {
            long m_signed = pos ? static_cast<long>(i + c) - static_cast<long>(k + d)
                                : static_cast<long>(k + d) - static_cast<long>(i + c);
            if (m_signed < 0) continue;
            uint32_t m = static_cast<uint32_t>(m_signed);
            uint32_t matched = pos ? i + c : k + d; // the coupled moment order
            Rat w(binomial(a, i) * binomial(b, k));
            if ((i + k) % 2) w = -w;
            w *= Rat(factorial(matched)) / Rat(factorial(m));
            w *= rat_pow(two_s, static_cast<long>(m) - static_cast<long>(matched) - 1);
            CoordTerm t;
            t.pa = pos ? a - i + m : a - i;
            t.pb = pos ? b - k : b - k + m;
            t.c = std::move(w);
            out.push_back(std::move(t));
        }
    }
    return out;
}

} // namespace

GaussPoly twisted_convolve(const GaussPoly& f, const GaussPoly& g) {
    require_same_context(f.context(), g.context(), "twisted_convolve");
    const WeylContext& ctx = f.context();
    Rat s = ctx.abs_lambda();
    if (f.gauss_t() != s || g.gauss_t() != s)
        throw domain_error(
            "twisted_convolve: both factors must have gauss_t = |lambda|");
    if (!f.is_zero() && !g.is_zero() && f.degree() + g.degree() > max_degree())
        throw degree_error("twisted_convolve: degree cap exceeded");

    bool pos = ctx.lambda_sign() > 0;
    Rat two_s = ctx.two_abs_lambda();
    int n = ctx.n;
    GaussPoly out(ctx, s);

    for (const auto& [kf, cf] : f.terms()) {
        for (const auto& [kg, cg] : g.terms()) {
            // Combine per-coordinate factors.
            std::vector<std::tuple<MIdx, MIdx, Rat>> acc;
            acc.emplace_back(mi_zero(n), mi_zero(n), Rat(1));
            for (int j = 0; j < n; ++j) {
                auto tj = coord_integral(kf.a[j], kf.b[j], kg.a[j], kg.b[j],
                                         two_s, pos);
                std::vector<std::tuple<MIdx, MIdx, Rat>> next;
                next.reserve(acc.size() * tj.size());
                for (const auto& [A, B, w] : acc) {
                    for (const auto& t : tj) {
                        MIdx A2 = A, B2 = B;
                        A2[j] = t.pa;
                        B2[j] = t.pb;
                        next.emplace_back(std::move(A2), std::move(B2), w * t.c);
                    }
                }
                acc = std::move(next);
            }
            PiScalar base = cf * cg;
            for (const auto& [A, B, w] : acc)
                out.add_term(A, B, base * PiScalar::pi_pow(n, CRat(w)));
        }
    }
    return out;
}

} // namespace hh
