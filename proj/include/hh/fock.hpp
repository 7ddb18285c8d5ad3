#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "hh/context.hpp"
#include "hh/errors.hpp"
#include "hh/multi_index.hpp"
#include "hh/pi_scalar.hpp"

namespace hh {

// Truncated holomorphic-monomial basis: all w^nu with |nu| <= cutoff, in
// graded-lex ascending order, with squared norms ("gram weights")
//   g_nu = nu! / (2|lambda|)^{|nu|}.
class FockTruncation {
public:
    FockTruncation(WeylContext ctx, unsigned cutoff);

    const WeylContext& context() const { return ctx_; }
    unsigned cutoff() const { return N_; }
    std::size_t dim() const { return basis_.size(); }
    const MIdx& index(std::size_t i) const { return basis_.at(i); }
    const std::vector<MIdx>& basis() const { return basis_; }
    bool contains(const MIdx& nu) const { return pos_.count(nu) != 0; }
    std::size_t position(const MIdx& nu) const; // throws truncation_error
    uint32_t degree_of(std::size_t i) const { return mi_degree(basis_.at(i)); }
    const Rat& gram(std::size_t i) const { return gram_.at(i); }
    Rat gram_of(const MIdx& nu) const;

    // Indices of all basis vectors of total degree k.
    std::vector<std::size_t> degree_slice(uint32_t k) const;
    // Indices whose first-block degree is m1 and second-block degree is m2.
    std::vector<std::size_t> block_slice(const Family& fam, uint32_t m1,
                                         uint32_t m2) const;

    friend bool operator==(const FockTruncation& a, const FockTruncation& b) {
        return a.ctx_ == b.ctx_ && a.N_ == b.N_;
    }

private:
    WeylContext ctx_;
    unsigned N_;
    std::vector<MIdx> basis_;
    std::map<MIdx, std::size_t> pos_;
    std::vector<Rat> gram_;
};

using FockPtr = std::shared_ptr<const FockTruncation>;
FockPtr make_fock(WeylContext ctx, unsigned cutoff);

// Dense matrix over the pi-scalar ring acting on a FockTruncation.
// Column nu holds the image of w^nu: (A w^nu) = sum_mu A_{mu,nu} w^mu.
class OperatorMatrix {
public:
    explicit OperatorMatrix(FockPtr fock);
    static OperatorMatrix identity(FockPtr fock);

    const FockTruncation& fock() const { return *fock_; }
    const FockPtr& fock_ptr() const { return fock_; }
    std::size_t dim() const { return fock_->dim(); }

    PiScalar& at(std::size_t mu, std::size_t nu);
    const PiScalar& at(std::size_t mu, std::size_t nu) const;

    OperatorMatrix operator-() const;
    OperatorMatrix& operator+=(const OperatorMatrix& o);
    OperatorMatrix& operator-=(const OperatorMatrix& o);
    friend OperatorMatrix operator+(OperatorMatrix a, const OperatorMatrix& b) {
        a += b;
        return a;
    }
    friend OperatorMatrix operator-(OperatorMatrix a, const OperatorMatrix& b) {
        a -= b;
        return a;
    }
    friend OperatorMatrix operator*(const OperatorMatrix& a,
                                    const OperatorMatrix& b);
    OperatorMatrix& scale(const PiScalar& c);
    friend OperatorMatrix operator*(const PiScalar& c, OperatorMatrix a) {
        a.scale(c);
        return a;
    }

    // adj(A)_{mu,nu} = (g_nu / g_mu) conj(A_{nu,mu}), the adjoint for the
    // weighted inner product with gram weights g.
    OperatorMatrix adjoint() const;

    bool is_zero() const;
    std::size_t nnz() const;
    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);
    friend bool operator!=(const OperatorMatrix& a, const OperatorMatrix& b) {
        return !(a == b);
    }

private:
    FockPtr fock_;
    std::vector<PiScalar> e_; // row-major, dim x dim
};

// Hilbert-Schmidt pairing <A,B> = sum_{mu,nu} (g_mu/g_nu) A_{mu,nu} conj(B_{mu,nu}).
PiScalar hs_inner(const OperatorMatrix& A, const OperatorMatrix& B);
PiScalar trace(const OperatorMatrix& A);

// Ladder pair on the truncation. For lambda > 0, Wbar_j multiplies by
// 2|lambda| w_j (entries raising past the cutoff are dropped) and W_j is
// d/dw_j; for lambda < 0 the two roles swap. Inside the truncation
// [Wbar_j, W_k] = -2 delta_{jk} lambda I and adj(W_j) = Wbar_j.
OperatorMatrix ladder_W(const FockPtr& fock, int j);
OperatorMatrix ladder_Wbar(const FockPtr& fock, int j);

// Orthogonal projector onto span{w^nu : |nu| = k}.
OperatorMatrix degree_projector(const FockPtr& fock, uint32_t k);
// Projector onto the product-family block (m1, m2).
OperatorMatrix block_projector(const FockPtr& fock, const Family& fam,
                               uint32_t m1, uint32_t m2);

// Exact complex-rational n x n matrices.
using CMatrix = std::vector<std::vector<CRat>>;
CMatrix cmatrix_identity(std::size_t n);
bool is_unitary(const CMatrix& U);

// The Fock-side action of a unitary k, intertwining the displacement family:
// U(k) V_z U(k)^{-1} = V_{kz}. Throws domain_error unless U is exactly unitary.
OperatorMatrix fock_unitary(const FockPtr& fock, const CMatrix& U);

} // namespace hh
