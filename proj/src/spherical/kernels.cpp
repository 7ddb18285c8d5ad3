#include "hh/kernels.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>

#include "hh/errors.hpp"
#include "hh/laguerre.hpp"
#include "hh/spherical.hpp"

namespace hh {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::vector<double> laguerre_coeffs_d(unsigned k, unsigned alpha) {
    std::vector<Rat> exact = laguerre_coeffs(k, Rat((long)alpha));
    std::vector<double> out(exact.size());
    for (std::size_t j = 0; j < exact.size(); ++j) out[j] = exact[j].get_d();
    return out;
}

double horner(const std::vector<double>& c, double x) {
    double v = 0;
    for (std::size_t j = c.size(); j-- > 0;) v = v * x + c[j];
    return v;
}

void require_product(const WeylContext& ctx, const Family& fam,
                     const char* where) {
    if (fam.kind != Family::product)
        throw domain_error(std::string(where) + ": product family required");
    fam.check_against(ctx);
}

void require_circle_blocks(const WeylContext& ctx, const Family& fam,
                           const char* where) {
    require_product(ctx, fam, where);
    if (fam.n1 != 1 || fam.n2 != 1)
        throw domain_error(std::string(where) + ": blocks of size one required");
}

void require_positive_lambda(const WeylContext& ctx, const char* where) {
    if (ctx.lambda <= 0)
        throw domain_error(std::string(where) +
                           ": surface factorization requires positive lambda");
}

double gamma_ratio(unsigned n_block, unsigned m, unsigned p, unsigned q) {
    // Gamma(n) Gamma(m - p + 1) / Gamma(m + n + q)
    Rat r = Rat(factorial(n_block - 1)) * Rat(factorial(m - p)) /
            Rat(factorial(m + n_block + q - 1));
    return r.get_d();
}

// One block's factor of the surface scalar b (blocks of any size).
double b_block(const WeylContext& ctx, unsigned n_block, unsigned m, unsigned p,
               unsigned q, double a) {
    double lam = ctx.abs_lambda().get_d();
    std::vector<double> lc = laguerre_coeffs_d(m - p, n_block + p + q - 1);
    double v = gamma_ratio(n_block, m, p, q) *
               std::pow(a, 2.0 * (double)(p + q)) *
               horner(lc, 2.0 * lam * a * a) * std::exp(-lam * a * a);
    return (q % 2 == 0) ? v : -v;
}

} // namespace

double laguerre_gaussian_value(const WeylContext& ctx, unsigned k,
                               unsigned alpha, double t) {
    double lam = ctx.abs_lambda().get_d();
    return horner(laguerre_coeffs_d(k, alpha), 2.0 * lam * t) *
           std::exp(-lam * t);
}

cdouble kernel_Q(const WeylContext& ctx, const Family& fam, unsigned m1,
                 unsigned m2, double a1, double a2,
                 const std::vector<cdouble>& z,
                 const std::vector<cdouble>& omega) {
    require_product(ctx, fam, "kernel_Q");
    if (z.size() != (std::size_t)ctx.n || omega.size() != (std::size_t)ctx.n)
        throw domain_error("kernel_Q: vectors must have length n");
    double lam_signed = ctx.lambda.get_d();
    double lam = std::abs(lam_signed);
    double value = std::pow(std::numbers::pi, -(double)ctx.n) *
                   std::pow(2.0 * lam, (double)ctx.n);
    double phase = 0;
    std::size_t lo = 0;
    for (int block = 0; block < 2; ++block) {
        std::size_t nb = (std::size_t)(block == 0 ? fam.n1 : fam.n2);
        double a = block == 0 ? a1 : a2;
        unsigned m = block == 0 ? m1 : m2;
        double t = 0, im = 0;
        for (std::size_t j = lo; j < lo + nb; ++j) {
            t += std::norm(z[j] - a * omega[j]);
            im += std::imag(z[j] * std::conj(omega[j]));
        }
        value *= laguerre_gaussian_value(ctx, m, (unsigned)(nb - 1), t);
        phase -= 2.0 * lam_signed * a * im;
        lo += nb;
    }
    return value * std::polar(1.0, phase);
}

std::optional<LaguerreZero> laguerre_precheck(const WeylContext& ctx,
                                              const Family& fam, unsigned m1,
                                              unsigned m2, const Rat& a1,
                                              const Rat& a2, unsigned qmax) {
    require_product(ctx, fam, "laguerre_precheck");
    for (int block = 0; block < 2; ++block) {
        unsigned nb = (unsigned)(block == 0 ? fam.n1 : fam.n2);
        unsigned m = block == 0 ? m1 : m2;
        const Rat& a = block == 0 ? a1 : a2;
        Rat x = ctx.two_abs_lambda() * a * a;
        for (unsigned p = 0; p <= m; ++p)
            for (unsigned q = 0; q <= qmax; ++q)
                if (laguerre_eval(m - p, Rat((long)(nb + p + q - 1)), x) == 0)
                    return LaguerreZero{block + 1, p, q};
    }
    return std::nullopt;
}

double surface_b_scalar(const WeylContext& ctx, const Family& fam, unsigned m1,
                        unsigned m2, unsigned p1, unsigned q1, unsigned p2,
                        unsigned q2, double a1, double a2) {
    require_product(ctx, fam, "surface_b_scalar");
    require_positive_lambda(ctx, "surface_b_scalar");
    if (p1 > m1 || p2 > m2) return 0.0;
    return b_block(ctx, (unsigned)fam.n1, m1, p1, q1, a1) *
           b_block(ctx, (unsigned)fam.n2, m2, p2, q2, a2);
}

cdouble surface_convolve_value(const WeylContext& ctx, const Family& fam,
                               unsigned m1, unsigned m2, unsigned p1,
                               unsigned q1, unsigned p2, unsigned q2,
                               double a1, double a2,
                               const std::vector<cdouble>& z, double tol) {
    require_circle_blocks(ctx, fam, "surface_convolve_value");
    if (z.size() != 2)
        throw domain_error("surface_convolve_value: z must have length 2");
    GaussPoly psi = bounded_spherical_product(ctx, fam, m1, m2);
    double lam_signed = ctx.lambda.get_d();
    auto grid_value = [&](std::size_t pts) {
        cdouble sum = 0;
        std::vector<cdouble> arg(2);
        for (std::size_t j1 = 0; j1 < pts; ++j1) {
            cdouble w1 = a1 * std::polar(1.0, kTwoPi * (double)j1 / (double)pts);
            for (std::size_t j2 = 0; j2 < pts; ++j2) {
                cdouble w2 =
                    a2 * std::polar(1.0, kTwoPi * (double)j2 / (double)pts);
                arg[0] = z[0] - w1;
                arg[1] = z[1] - w2;
                cdouble mono = std::pow(w1, (double)p1) *
                               std::pow(std::conj(w1), (double)q1) *
                               std::pow(w2, (double)p2) *
                               std::pow(std::conj(w2), (double)q2);
                double im = std::imag(z[0] * std::conj(w1)) +
                            std::imag(z[1] * std::conj(w2));
                sum += mono * psi.evaluate(arg) *
                       std::polar(1.0, -2.0 * lam_signed * im);
            }
        }
        return sum / (double)(pts * pts);
    };
    cdouble prev = grid_value(32);
    for (std::size_t pts = 64; pts <= 2048; pts *= 2) {
        cdouble next = grid_value(pts);
        if (std::abs(next - prev) <= tol) return next;
        prev = next;
    }
    throw domain_error("surface_convolve_value: quadrature did not self-converge");
}

cdouble kernel_Q_mode(const WeylContext& ctx, const Family& fam, unsigned m1,
                      unsigned m2, double a1, double a2, int s1, int s2,
                      const std::vector<cdouble>& z, double tol) {
    require_circle_blocks(ctx, fam, "kernel_Q_mode");
    if (z.size() != 2)
        throw domain_error("kernel_Q_mode: z must have length 2");
    double lam_signed = ctx.lambda.get_d();
    double lam = std::abs(lam_signed);
    double pref = std::pow(std::numbers::pi, -2.0) * std::pow(2.0 * lam, 2.0);
    std::vector<double> lc1 = laguerre_coeffs_d(m1, 0);
    std::vector<double> lc2 = laguerre_coeffs_d(m2, 0);
    auto grid_value = [&](std::size_t pts) {
        cdouble sum = 0;
        for (std::size_t j1 = 0; j1 < pts; ++j1) {
            double t1 = kTwoPi * (double)j1 / (double)pts;
            cdouble w1 = std::polar(1.0, t1);
            double r1 = std::norm(z[0] - a1 * w1);
            double f1 = horner(lc1, 2.0 * lam * r1) * std::exp(-lam * r1);
            double im1 = std::imag(z[0] * std::conj(w1));
            for (std::size_t j2 = 0; j2 < pts; ++j2) {
                double t2 = kTwoPi * (double)j2 / (double)pts;
                cdouble w2 = std::polar(1.0, t2);
                double r2 = std::norm(z[1] - a2 * w2);
                double f2 = horner(lc2, 2.0 * lam * r2) * std::exp(-lam * r2);
                double im2 = std::imag(z[1] * std::conj(w2));
                double phase = -2.0 * lam_signed * (a1 * im1 + a2 * im2) +
                               (double)s1 * t1 + (double)s2 * t2;
                sum += pref * f1 * f2 * std::polar(1.0, phase);
            }
        }
        return sum / (double)(pts * pts);
    };
    cdouble prev = grid_value(64);
    for (std::size_t pts = 128; pts <= 2048; pts *= 2) {
        cdouble next = grid_value(pts);
        if (std::abs(next - prev) <= tol) return next;
        prev = next;
    }
    throw domain_error("kernel_Q_mode: quadrature did not self-converge");
}

GaussPoly kernel_mode_profile(const WeylContext& ctx, const Family& fam,
                              unsigned m1, unsigned m2, unsigned p1,
                              unsigned q1, unsigned p2, unsigned q2) {
    require_circle_blocks(ctx, fam, "kernel_mode_profile");
    GaussPoly mono = GaussPoly::monomial(ctx, Rat(0), MIdx{p1, p2},
                                         MIdx{q1, q2}, PiScalar::one());
    return generalized_spherical_product(mono, fam, m1, m2);
}

cdouble kernel_P(const WeylContext& ctx, const Family& fam, unsigned m1,
                 unsigned m2, double a1, double a2, unsigned qmax,
                 const std::vector<cdouble>& z,
                 const std::vector<cdouble>& omega, double* tail_bound) {
    require_circle_blocks(ctx, fam, "kernel_P");
    require_positive_lambda(ctx, "kernel_P");
    if (z.size() != 2 || omega.size() != 2)
        throw domain_error("kernel_P: vectors must have length 2");
    double lam = ctx.abs_lambda().get_d();
    double pref = std::pow(std::numbers::pi, -2.0) * std::pow(2.0 * lam, 2.0);

    // One block-mode term, without the global prefactor: the shift scalar,
    // the theta-profile factor at z, and the conjugated sphere monomial.
    auto term = [&](int block, unsigned m, double a, cdouble zb, cdouble wb,
                    unsigned p, unsigned q) {
        (void)block;
        double x = 2.0 * lam * std::norm(zb);
        std::vector<double> lc = laguerre_coeffs_d(m - p, p + q);
        double radial = horner(lc, x) * std::exp(-lam * std::norm(zb));
        cdouble zpow = std::pow(zb, (double)p) *
                       std::pow(std::conj(zb), (double)q);
        cdouble wpow = std::pow(std::conj(wb), (double)p) *
                       std::pow(wb, (double)q);
        double scal = std::pow(a, -(double)(p + q)) *
                      b_block(ctx, 1, m, p, q, a) *
                      std::pow(2.0 * lam, (double)(p + q));
        // the two (-1)^q signs (shift scalar and theta profile) cancel
        return scal * ((q % 2 == 0) ? 1.0 : -1.0) * zpow * radial * wpow;
    };

    cdouble block_sum[2];
    double block_tail[2];
    for (int block = 0; block < 2; ++block) {
        unsigned m = block == 0 ? m1 : m2;
        double a = block == 0 ? a1 : a2;
        cdouble zb = z[(std::size_t)block];
        cdouble wb = omega[(std::size_t)block];
        cdouble sum = 0;
        for (unsigned p = 0; p <= m; ++p) sum += term(block, m, a, zb, wb, p, 0);
        for (unsigned q = 1; q <= qmax; ++q)
            sum += term(block, m, a, zb, wb, 0, q);
        block_sum[block] = sum;
        double tail = 0, prev_shell = 0, last_shell = 0;
        for (unsigned q = qmax + 1; q <= qmax + 5; ++q) {
            prev_shell = last_shell;
            last_shell = std::abs(term(block, m, a, zb, wb, 0, q));
            tail += last_shell;
        }
        double ratio = prev_shell > 0 ? last_shell / prev_shell : 0.0;
        tail += (ratio > 0 && ratio < 0.9) ? last_shell * ratio / (1.0 - ratio)
                                           : 10.0 * last_shell;
        block_tail[block] = tail;
    }
    if (tail_bound)
        *tail_bound = pref * (std::abs(block_sum[0]) * block_tail[1] +
                              block_tail[0] * std::abs(block_sum[1]) +
                              block_tail[0] * block_tail[1]);
    return pref * block_sum[0] * block_sum[1];
}

} // namespace hh
