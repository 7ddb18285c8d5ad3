#include "hh/harmonic.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hh/laguerre.hpp"

namespace hh {

GaussPoly laplacian_zz(const GaussPoly& f) {
    GaussPoly out = GaussPoly::zero(f.context(), f.gauss_t());
    for (int j = 0; j < f.context().n; ++j) out += f.dz(j).dzbar(j);
    return out;
}

unsigned harmonic_dim(int n, unsigned p, unsigned q) {
    auto monos = [n](unsigned d) { return binomial(uint64_t(n) - 1 + d, d); };
    Int dim = monos(p) * monos(q);
    if (p > 0 && q > 0) dim -= monos(p - 1) * monos(q - 1);
    return static_cast<unsigned>(dim.get_ui());
}

namespace {

using Bigrade = std::pair<uint32_t, uint32_t>;

// Split a bare polynomial into bigraded components (|a|, |b|).
std::map<Bigrade, GaussPoly> bigrade_split(const GaussPoly& f) {
    std::map<Bigrade, GaussPoly> out;
    for (const auto& [key, c] : f.terms()) {
        Bigrade g{mi_degree(key.a), mi_degree(key.b)};
        auto it = out.find(g);
        if (it == out.end())
            it = out.emplace(g, GaussPoly::zero(f.context(), f.gauss_t())).first;
        it->second.add_term(key.a, key.b, c);
    }
    return out;
}

// Monomial pairs (a, b) with |a| = p, |b| = q, in graded-lex order.
std::vector<std::pair<MIdx, MIdx>> bidegree_monomials(int n, unsigned p, unsigned q) {
    std::vector<std::pair<MIdx, MIdx>> out;
    for (const MIdx& a : mi_all_of_degree(std::size_t(n), p))
        for (const MIdx& b : mi_all_of_degree(std::size_t(n), q))
            out.emplace_back(a, b);
    return out;
}

// Exact decomposition of a bidegree-(P,Q) component as
//   comp = sum_{k=0}^{min(P,Q)} |z|^{2k} h_k,   h_k harmonic of bidegree
//   (P-k, Q-k),
// extracted top-down with repeated Laplacians: for harmonic h,
//   Delta^k(|z|^{2k} h) = [prod_{j=1}^{k} j (n+P+Q-2k+j-1)] h,
// and Delta^m annihilates the |z|^{2k} layer whenever m > k, so each step
// isolates the deepest remaining layer. The product is never zero because
// n + P + Q - 2k >= n >= 1.
void peel(const GaussPoly& comp, uint32_t P, uint32_t Q,
          std::vector<HarmonicPiece>& out) {
    if (comp.is_zero()) return;
    const WeylContext& ctx = comp.context();
    GaussPoly r2 = radial_power(ctx, 1, 0, ctx.n);
    GaussPoly rem = comp;
    for (uint32_t k = std::min(P, Q); k > 0; --k) {
        GaussPoly t = rem;
        for (uint32_t i = 0; i < k; ++i) t = laplacian_zz(t);
        if (t.is_zero()) continue;
        Rat A(1);
        for (uint32_t j = 1; j <= k; ++j)
            A *= Rat(long(j)) * Rat(long(unsigned(ctx.n) + P + Q - 2 * k + j - 1));
        t.scale(PiScalar::from_rat(Rat(1) / A));
        GaussPoly layer = t;
        for (uint32_t i = 0; i < k; ++i) layer = layer * r2;
        rem -= layer;
        out.push_back(HarmonicPiece{P - k, Q - k, k, std::move(t)});
    }
    if (!rem.is_zero()) {
        if (!laplacian_zz(rem).is_zero())
            throw domain_error("harmonic_decompose: residue is not harmonic");
        out.push_back(HarmonicPiece{P, Q, 0, std::move(rem)});
    }
}

} // namespace

std::vector<GaussPoly> harmonic_basis(const WeylContext& ctx, unsigned p, unsigned q) {
    auto monos = bidegree_monomials(ctx.n, p, q);
    std::size_t cols = monos.size();

    // Constraint rows: coefficient of each bidegree-(p-1, q-1) monomial in
    // Delta(z^a zbar^b) = sum_j a_j b_j z^{a-e_j} zbar^{b-e_j}.
    std::vector<std::vector<Rat>> M;
    if (p > 0 && q > 0) {
        auto rows = bidegree_monomials(ctx.n, p - 1, q - 1);
        std::map<std::pair<MIdx, MIdx>, std::size_t> row_of;
        for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r]] = r;
        M.assign(rows.size(), std::vector<Rat>(cols, Rat(0)));
        for (std::size_t cidx = 0; cidx < cols; ++cidx) {
            const auto& [a, b] = monos[cidx];
            for (int j = 0; j < ctx.n; ++j) {
                if (a[j] == 0 || b[j] == 0) continue;
                auto key = std::make_pair(mi_sub(a, mi_unit(a.size(), j)),
                                          mi_sub(b, mi_unit(b.size(), j)));
                M[row_of.at(key)][cidx] += Rat(long(a[j])) * Rat(long(b[j]));
            }
        }
    }

    // Reduced row echelon form over the rationals.
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < cols && rank < M.size(); ++col) {
        std::size_t sel = rank;
        while (sel < M.size() && M[sel][col] == 0) ++sel;
        if (sel == M.size()) continue;
        std::swap(M[sel], M[rank]);
        Rat inv = Rat(1) / M[rank][col];
        for (auto& v : M[rank]) v *= inv;
        for (std::size_t r = 0; r < M.size(); ++r) {
            if (r == rank || M[r][col] == 0) continue;
            Rat factor = M[r][col];
            for (std::size_t cc = 0; cc < cols; ++cc)
                M[r][cc] -= factor * M[rank][cc];
        }
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    std::vector<GaussPoly> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        GaussPoly v = GaussPoly::zero(ctx, make_rat(0));
        v.add_term(monos[free].first, monos[free].second, PiScalar::one());
        for (std::size_t r = 0; r < rank; ++r) {
            const Rat& coef = M[r][free];
            if (coef == 0) continue;
            v.add_term(monos[pivot_col[r]].first, monos[pivot_col[r]].second,
                       PiScalar::from_rat(-coef));
        }
        basis.push_back(std::move(v));
    }
    if (basis.size() != harmonic_dim(ctx.n, p, q))
        throw domain_error("harmonic_basis: rank mismatch");
    return basis;
}

std::vector<HarmonicPiece> harmonic_decompose(const GaussPoly& f) {
    if (!f.is_polynomial())
        throw domain_error("harmonic_decompose: input must be a bare polynomial");
    std::vector<HarmonicPiece> out;
    for (const auto& [grade, comp] : bigrade_split(f))
        peel(comp, grade.first, grade.second, out);
    std::sort(out.begin(), out.end(), [](const HarmonicPiece& x, const HarmonicPiece& y) {
        return std::tie(x.p, x.q, x.k) < std::tie(y.p, y.q, y.k);
    });
    return out;
}

GaussPoly component_project(const GaussPoly& f, unsigned p, unsigned q) {
    const WeylContext& ctx = f.context();
    GaussPoly out = GaussPoly::zero(ctx, make_rat(0));
    for (const auto& piece : harmonic_decompose(f)) {
        if (piece.p != p || piece.q != q) continue;
        out += radial_power(ctx, piece.k, 0, ctx.n) * piece.h;
    }
    return out;
}

PiScalar sphere_total(int n) {
    return PiScalar::pi_pow(n, CRat(Rat(2) / Rat(factorial(unsigned(n) - 1))));
}

PiScalar sphere_moment(int n, const MIdx& A, const MIdx& B) {
    if (A != B) return PiScalar::zero();
    Rat c = Rat(2) * Rat(mi_factorial(A)) /
            Rat(factorial(unsigned(n) - 1 + mi_degree(A)));
    return PiScalar::pi_pow(n, CRat(c));
}

PiScalar sphere_inner(const GaussPoly& f, const GaussPoly& g) {
    require_same_context(f.context(), g.context(), "sphere_inner");
    if (!f.is_polynomial() || !g.is_polynomial())
        throw domain_error("sphere_inner: arguments must be bare polynomials");
    int n = f.context().n;
    PiScalar acc;
    for (const auto& [fk, fc] : f.terms()) {
        for (const auto& [gk, gc] : g.terms()) {
            // f term z^a zbar^b times conj(g term) zbar^c z^d.
            MIdx A = mi_add(fk.a, gk.b);
            MIdx B = mi_add(fk.b, gk.a);
            PiScalar m = sphere_moment(n, A, B);
            if (!m.is_zero()) acc += fc * gc.conj() * m;
        }
    }
    return acc;
}

HarmonicColumn harmonic_column(const WeylContext& ctx, unsigned p, unsigned q) {
    std::vector<GaussPoly> raw = harmonic_basis(ctx, p, q);
    HarmonicColumn col;
    for (GaussPoly v : raw) {
        for (const GaussPoly& b : col.basis) {
            PiScalar proj = sphere_inner(v, b).divide_exact(sphere_inner(b, b));
            GaussPoly scaled = b;
            scaled.scale(proj);
            v -= scaled;
        }
        if (v.is_zero()) throw domain_error("harmonic_column: dependent basis");
        col.basis.push_back(std::move(v));
    }
    Rat d(static_cast<long>(col.basis.size()));
    for (const GaussPoly& b : col.basis) {
        PiScalar s = sphere_inner(b, b);
        PiScalar r = sphere_total(ctx.n).divide_exact(s);
        if (!r.is_rational())
            throw domain_error("harmonic_column: weight is not rational");
        col.weights.push_back(r.as_rat() / d);
    }
    return col;
}

namespace {

// Re-index a polynomial over a block sub-context into the full context,
// placing block coordinates at the given offset.
GaussPoly embed_block(const GaussPoly& f, const WeylContext& full, int offset) {
    GaussPoly out = GaussPoly::zero(full, f.gauss_t());
    std::size_t nb = static_cast<std::size_t>(f.context().n);
    for (const auto& [key, c] : f.terms()) {
        MIdx a = mi_zero(std::size_t(full.n));
        MIdx b = mi_zero(std::size_t(full.n));
        for (std::size_t j = 0; j < nb; ++j) {
            a[std::size_t(offset) + j] = key.a[j];
            b[std::size_t(offset) + j] = key.b[j];
        }
        out.add_term(a, b, c);
    }
    return out;
}

std::pair<int, int> block_span(const Family& fam, int block) {
    if (block == 0) return {0, fam.n1};
    if (block == 1) return {fam.n1, fam.n1 + fam.n2};
    throw domain_error("block index must be 0 or 1");
}

} // namespace

std::vector<GaussPoly> harmonic_basis_block(const WeylContext& ctx,
                                            const Family& fam, int block,
                                            unsigned p, unsigned q) {
    fam.check_against(ctx);
    auto [lo, hi] = block_span(fam, block);
    WeylContext sub(hi - lo, ctx.lambda);
    std::vector<GaussPoly> out;
    for (const GaussPoly& v : harmonic_basis(sub, p, q))
        out.push_back(embed_block(v, ctx, lo));
    return out;
}

HarmonicColumn harmonic_column_block(const WeylContext& ctx, const Family& fam,
                                     int block, unsigned p, unsigned q) {
    fam.check_against(ctx);
    auto [lo, hi] = block_span(fam, block);
    WeylContext sub(hi - lo, ctx.lambda);
    HarmonicColumn inner = harmonic_column(sub, p, q);
    HarmonicColumn out;
    for (const GaussPoly& b : inner.basis)
        out.basis.push_back(embed_block(b, ctx, lo));
    out.weights = std::move(inner.weights);
    return out;
}

HarmonicColumn harmonic_column_product(const WeylContext& ctx, const Family& fam,
                                       unsigned p1, unsigned q1, unsigned p2,
                                       unsigned q2) {
    HarmonicColumn c1 = harmonic_column_block(ctx, fam, 0, p1, q1);
    HarmonicColumn c2 = harmonic_column_block(ctx, fam, 1, p2, q2);
    HarmonicColumn out;
    for (std::size_t j = 0; j < c1.basis.size(); ++j) {
        for (std::size_t l = 0; l < c2.basis.size(); ++l) {
            out.basis.push_back(c1.basis[j] * c2.basis[l]);
            out.weights.push_back(c1.weights[j] * c2.weights[l]);
        }
    }
    return out;
}

} // namespace hh
