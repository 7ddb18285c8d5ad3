#include "hh/oracle.hpp"

#include <cmath>
#include <cstddef>

#include "hh/errors.hpp"
#include "hh/laguerre.hpp"

namespace hh {

namespace {

using cdouble = std::complex<double>;

double norm1(const DMat& A) {
    double best = 0;
    if (A.empty()) return 0;
    for (std::size_t j = 0; j < A.size(); ++j) {
        double s = 0;
        for (std::size_t i = 0; i < A.size(); ++i) s += std::abs(A[i][j]);
        best = std::max(best, s);
    }
    return best;
}

DMat dmat_zero(std::size_t d) {
    return DMat(d, std::vector<cdouble>(d, cdouble(0)));
}

DMat dmat_identity(std::size_t d) {
    DMat I = dmat_zero(d);
    for (std::size_t i = 0; i < d; ++i) I[i][i] = 1.0;
    return I;
}

DMat dmat_mul(const DMat& A, const DMat& B) {
    std::size_t d = A.size();
    DMat C = dmat_zero(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            cdouble a = A[i][k];
            if (a == cdouble(0)) continue;
            for (std::size_t j = 0; j < d; ++j) C[i][j] += a * B[k][j];
        }
    return C;
}

DMat op_to_dense(const OperatorMatrix& A) {
    std::size_t d = A.dim();
    DMat M = dmat_zero(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) M[i][j] = A.at(i, j).eval();
    return M;
}

} // namespace

GaussHermite gauss_hermite(unsigned m) {
    if (m == 0) throw domain_error("gauss_hermite: order must be positive");
    const double quarter_root_pi = 0.75112554446494248286;
    GaussHermite gh;
    gh.x.assign(m, 0.0);
    gh.w.assign(m, 0.0);
    unsigned half = (m + 1) / 2;
    double z = 0;
    for (unsigned i = 0; i < half; ++i) {
        // asymptotic first guesses, then Newton on the orthonormal recurrence
        if (i == 0) {
            z = std::sqrt(2.0 * m + 1.0) -
                1.85575 * std::pow(2.0 * m + 1.0, -1.0 / 6.0);
        } else if (i == 1) {
            z -= 1.14 * std::pow((double)m, 0.426) / z;
        } else if (i == 2) {
            z = 1.86 * z - 0.86 * gh.x[0];
        } else if (i == 3) {
            z = 1.91 * z - 0.91 * gh.x[1];
        } else {
            z = 2.0 * z - gh.x[i - 2];
        }
        double pp = 0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = quarter_root_pi, p2 = 0;
            for (unsigned j = 1; j <= m; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 -
                     std::sqrt((j - 1.0) / j) * p3;
            }
            pp = std::sqrt(2.0 * m) * p2;
            double dz = p1 / pp;
            z -= dz;
            if (std::abs(dz) < 1e-15) break;
        }
        gh.x[i] = z;
        gh.x[m - 1 - i] = -z;
        gh.w[i] = 2.0 / (pp * pp);
        gh.w[m - 1 - i] = gh.w[i];
    }
    return gh;
}

std::complex<double> integrate_oracle(const GaussPoly& f) {
    if (f.is_zero()) return 0.0;
    Rat t = f.gauss_t();
    if (t <= 0)
        throw domain_error("integrate_oracle: gauss_t must be positive");
    GaussPoly bare = f.times_gauss(-t);
    int n = f.context().n;
    unsigned m = bare.degree() / 2 + 2;
    GaussHermite gh = gauss_hermite(m);
    double root_t = std::sqrt(t.get_d());

    std::vector<unsigned> idx((std::size_t)(2 * n), 0);
    std::vector<cdouble> z((std::size_t)n);
    cdouble sum = 0;
    for (;;) {
        double weight = 1;
        for (std::size_t c = 0; c < idx.size(); ++c) weight *= gh.w[idx[c]];
        for (int j = 0; j < n; ++j)
            z[(std::size_t)j] = cdouble(gh.x[idx[(std::size_t)(2 * j)]],
                                        gh.x[idx[(std::size_t)(2 * j + 1)]]) /
                                root_t;
        sum += weight * bare.evaluate(z);
        std::size_t c = 0;
        while (c < idx.size() && ++idx[c] == m) idx[c++] = 0;
        if (c == idx.size()) break;
    }
    return sum * std::pow(t.get_d(), -n);
}

std::complex<double> l2_inner_oracle(const GaussPoly& f, const GaussPoly& g) {
    return integrate_oracle(f * g.conj());
}

DMat matrix_exp(DMat A) {
    std::size_t d = A.size();
    double a = norm1(A);
    int squarings = 0;
    while (a > 0.5 && squarings < 40) {
        a /= 2;
        ++squarings;
    }
    double scale = std::ldexp(1.0, -squarings);
    for (auto& row : A)
        for (auto& v : row) v *= scale;

    DMat sum = dmat_identity(d);
    DMat term = dmat_identity(d);
    for (int k = 1; k <= 60; ++k) {
        term = dmat_mul(term, A);
        for (auto& row : term)
            for (auto& v : row) v /= (double)k;
        double biggest = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                sum[i][j] += term[i][j];
                biggest = std::max(biggest, std::abs(term[i][j]));
            }
        if (biggest < 1e-20) break;
    }
    for (int s = 0; s < squarings; ++s) sum = dmat_mul(sum, sum);
    return sum;
}

DMat displacement_oracle(const FockPtr& fock,
                         const std::vector<std::complex<double>>& z) {
    const WeylContext& ctx = fock->context();
    if ((int)z.size() != ctx.n)
        throw domain_error("displacement_oracle: z has wrong length");
    std::size_t d = fock->dim();
    DMat G = dmat_zero(d);
    bool positive = ctx.lambda_sign() > 0;
    for (int j = 0; j < ctx.n; ++j) {
        // derivative and multiplication generators, by branch
        DMat D = op_to_dense(positive ? ladder_W(fock, j) : ladder_Wbar(fock, j));
        DMat M = op_to_dense(positive ? ladder_Wbar(fock, j) : ladder_W(fock, j));
        cdouble zj = z[(std::size_t)j];
        cdouble dcoef = positive ? std::conj(zj) : -zj;
        cdouble mcoef = positive ? -zj : std::conj(zj);
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c)
                G[r][c] += dcoef * D[r][c] + mcoef * M[r][c];
    }
    return matrix_exp(std::move(G));
}

Rat laguerre_exp_integral(unsigned k) {
    std::vector<Rat> c = laguerre_coeffs(k, Rat(0));
    Rat total(0);
    Rat fact(1);
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (j > 0) fact *= Rat((long)j);
        total += c[j] * fact;
    }
    return total;
}

} // namespace hh
