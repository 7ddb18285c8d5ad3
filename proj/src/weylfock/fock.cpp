#include "hh/fock.hpp"

#include <utility>

namespace hh {

FockTruncation::FockTruncation(WeylContext ctx, unsigned cutoff)
    : ctx_(std::move(ctx)), N_(cutoff) {
    basis_ = mi_all_up_to(static_cast<std::size_t>(ctx_.n), N_);
    gram_.reserve(basis_.size());
    Rat two_lam = ctx_.two_abs_lambda();
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        pos_.emplace(basis_[i], i);
        gram_.push_back(Rat(mi_factorial(basis_[i])) /
                        rat_pow(two_lam, mi_degree(basis_[i])));
    }
}

std::size_t FockTruncation::position(const MIdx& nu) const {
    auto it = pos_.find(nu);
    if (it == pos_.end())
        throw truncation_error("FockTruncation: index outside the truncation");
    return it->second;
}

Rat FockTruncation::gram_of(const MIdx& nu) const { return gram_.at(position(nu)); }

std::vector<std::size_t> FockTruncation::degree_slice(uint32_t k) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (mi_degree(basis_[i]) == k) out.push_back(i);
    return out;
}

std::vector<std::size_t> FockTruncation::block_slice(const Family& fam,
                                                     uint32_t m1,
                                                     uint32_t m2) const {
    if (fam.kind != Family::product)
        throw domain_error("block_slice: requires a product family");
    fam.check_against(ctx_);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const MIdx& nu = basis_[i];
        uint32_t d1 = 0, d2 = 0;
        for (int j = 0; j < fam.n1; ++j) d1 += nu[j];
        for (int j = fam.n1; j < ctx_.n; ++j) d2 += nu[j];
        if (d1 == m1 && d2 == m2) out.push_back(i);
    }
    return out;
}

FockPtr make_fock(WeylContext ctx, unsigned cutoff) {
    return std::make_shared<const FockTruncation>(std::move(ctx), cutoff);
}

namespace {
void require_same_fock(const OperatorMatrix& a, const OperatorMatrix& b,
                       const char* where) {
    if (!(a.fock() == b.fock()))
        throw context_error(std::string(where) +
                            ": operators live on different truncations");
}
} // namespace

OperatorMatrix::OperatorMatrix(FockPtr fock)
    : fock_(std::move(fock)), e_(fock_->dim() * fock_->dim()) {}

OperatorMatrix OperatorMatrix::identity(FockPtr fock) {
    OperatorMatrix m(std::move(fock));
    for (std::size_t i = 0; i < m.dim(); ++i) m.at(i, i) = PiScalar::one();
    return m;
}

PiScalar& OperatorMatrix::at(std::size_t mu, std::size_t nu) {
    return e_.at(mu * dim() + nu);
}

const PiScalar& OperatorMatrix::at(std::size_t mu, std::size_t nu) const {
    return e_.at(mu * dim() + nu);
}

OperatorMatrix OperatorMatrix::operator-() const {
    OperatorMatrix r(fock_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

OperatorMatrix& OperatorMatrix::operator+=(const OperatorMatrix& o) {
    require_same_fock(*this, o, "OperatorMatrix::add");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
}

OperatorMatrix& OperatorMatrix::operator-=(const OperatorMatrix& o) {
    require_same_fock(*this, o, "OperatorMatrix::sub");
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same_fock(a, b, "OperatorMatrix::mul");
    std::size_t d = a.dim();
    OperatorMatrix r(a.fock_);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < d; ++k) {
            const PiScalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j) {
                const PiScalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                r.at(i, j) += aik * bkj;
            }
        }
    }
    return r;
}

OperatorMatrix& OperatorMatrix::scale(const PiScalar& c) {
    for (auto& v : e_) v *= c;
    return *this;
}

OperatorMatrix OperatorMatrix::adjoint() const {
    std::size_t d = dim();
    OperatorMatrix r(fock_);
    for (std::size_t mu = 0; mu < d; ++mu) {
        for (std::size_t nu = 0; nu < d; ++nu) {
            const PiScalar& v = at(nu, mu);
            if (v.is_zero()) continue;
            Rat w = fock_->gram(nu) / fock_->gram(mu);
            r.at(mu, nu) = v.conj().scale(CRat(w));
        }
    }
    return r;
}

bool OperatorMatrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

std::size_t OperatorMatrix::nnz() const {
    std::size_t k = 0;
    for (const auto& v : e_)
        if (!v.is_zero()) ++k;
    return k;
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.fock() == b.fock() && a.e_ == b.e_;
}

PiScalar hs_inner(const OperatorMatrix& A, const OperatorMatrix& B) {
    require_same_fock(A, B, "hs_inner");
    const FockTruncation& f = A.fock();
    PiScalar acc;
    for (std::size_t mu = 0; mu < f.dim(); ++mu) {
        for (std::size_t nu = 0; nu < f.dim(); ++nu) {
            const PiScalar& a = A.at(mu, nu);
            const PiScalar& b = B.at(mu, nu);
            if (a.is_zero() || b.is_zero()) continue;
            acc += (a * b.conj()).scale(CRat(f.gram(mu) / f.gram(nu)));
        }
    }
    return acc;
}

PiScalar trace(const OperatorMatrix& A) {
    PiScalar acc;
    for (std::size_t i = 0; i < A.dim(); ++i) acc += A.at(i, i);
    return acc;
}

OperatorMatrix ladder_W(const FockPtr& fock, int j) {
    const WeylContext& ctx = fock->context();
    if (j < 0 || j >= ctx.n) throw domain_error("ladder_W: coordinate out of range");
    OperatorMatrix m(fock);
    bool raising = ctx.lambda_sign() < 0; // lambda<0: W multiplies by 2|lambda| w_j
    for (std::size_t i = 0; i < fock->dim(); ++i) {
        const MIdx& nu = fock->index(i);
        if (raising) {
            MIdx up = mi_add(nu, mi_unit(nu.size(), j));
            if (fock->contains(up))
                m.at(fock->position(up), i) =
                    PiScalar::from_rat(ctx.two_abs_lambda());
        } else if (nu[j] > 0) {
            MIdx down = mi_sub(nu, mi_unit(nu.size(), j));
            m.at(fock->position(down), i) = PiScalar::from_int(nu[j]);
        }
    }
    return m;
}

OperatorMatrix ladder_Wbar(const FockPtr& fock, int j) {
    const WeylContext& ctx = fock->context();
    if (j < 0 || j >= ctx.n)
        throw domain_error("ladder_Wbar: coordinate out of range");
    OperatorMatrix m(fock);
    bool raising = ctx.lambda_sign() > 0; // lambda>0: Wbar multiplies by 2|lambda| w_j
    for (std::size_t i = 0; i < fock->dim(); ++i) {
        const MIdx& nu = fock->index(i);
        if (raising) {
            MIdx up = mi_add(nu, mi_unit(nu.size(), j));
            if (fock->contains(up))
                m.at(fock->position(up), i) =
                    PiScalar::from_rat(ctx.two_abs_lambda());
        } else if (nu[j] > 0) {
            MIdx down = mi_sub(nu, mi_unit(nu.size(), j));
            m.at(fock->position(down), i) = PiScalar::from_int(nu[j]);
        }
    }
    return m;
}

OperatorMatrix degree_projector(const FockPtr& fock, uint32_t k) {
    OperatorMatrix m(fock);
    for (std::size_t i : fock->degree_slice(k)) m.at(i, i) = PiScalar::one();
    return m;
}

OperatorMatrix block_projector(const FockPtr& fock, const Family& fam,
                               uint32_t m1, uint32_t m2) {
    OperatorMatrix m(fock);
    for (std::size_t i : fock->block_slice(fam, m1, m2))
        m.at(i, i) = PiScalar::one();
    return m;
}

CMatrix cmatrix_identity(std::size_t n) {
    CMatrix u(n, std::vector<CRat>(n));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = CRat(Rat(1));
    return u;
}

bool is_unitary(const CMatrix& U) {
    std::size_t n = U.size();
    for (const auto& row : U)
        if (row.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            CRat s;
            for (std::size_t k = 0; k < n; ++k) s = s + U[i][k] * U[j][k].conj();
            CRat want = (i == j) ? CRat(Rat(1)) : CRat();
            if (!(s == want)) return false;
        }
    }
    return true;
}

OperatorMatrix fock_unitary(const FockPtr& fock, const CMatrix& U) {
    const WeylContext& ctx = fock->context();
    if (U.size() != static_cast<std::size_t>(ctx.n))
        throw domain_error("fock_unitary: matrix size does not match n");
    if (!is_unitary(U)) throw domain_error("fock_unitary: matrix is not unitary");

    // Substitution realizing U(k) V_z U(k)^{-1} = V_{kz}:
    //   lambda > 0:  w_j -> sum_l U_{lj} w_l
    //   lambda < 0:  w_j -> sum_l conj(U_{lj}) w_l
    bool pos = ctx.lambda_sign() > 0;
    std::size_t n = U.size();
    OperatorMatrix m(fock);
    for (std::size_t col = 0; col < fock->dim(); ++col) {
        const MIdx& nu = fock->index(col);
        std::map<MIdx, CRat> poly;
        poly.emplace(mi_zero(n), CRat(Rat(1)));
        for (std::size_t j = 0; j < n; ++j) {
            for (uint32_t rep = 0; rep < nu[j]; ++rep) {
                std::map<MIdx, CRat> next;
                for (const auto& [mono, c] : poly) {
                    for (std::size_t l = 0; l < n; ++l) {
                        CRat ulj = pos ? U[l][j] : U[l][j].conj();
                        if (ulj.is_zero()) continue;
                        MIdx up = mi_add(mono, mi_unit(n, l));
                        auto [it, fresh] = next.emplace(up, c * ulj);
                        if (!fresh) it->second = it->second + c * ulj;
                    }
                }
                poly = std::move(next);
            }
        }
        for (const auto& [mono, c] : poly) {
            if (c.is_zero()) continue;
            m.at(fock->position(mono), col) = PiScalar::from(c);
        }
    }
    return m;
}

} // namespace hh
