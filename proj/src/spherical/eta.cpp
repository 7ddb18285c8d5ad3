#include "hh/eta.hpp"

#include <cmath>
#include <cstddef>

#include "hh/errors.hpp"

namespace hh {

double bessel_j0(double x) {
    const long double q = (long double)(x) * (long double)(x) / 4.0L;
    long double term = 1.0L, sum = 1.0L;
    for (int k = 1; k < 600; ++k) {
        term *= -q / ((long double)(k) * (long double)(k));
        sum += term;
        if (term > -1e-25L && term < 1e-25L) break;
    }
    return (double)sum;
}

double hyp0f1(double b, double x) {
    if (b <= 0)
        throw domain_error("hyp0f1: parameter must be positive");
    long double term = 1.0L, sum = 1.0L;
    const long double xl = (long double)x, bl = (long double)b;
    for (int k = 1; k < 600; ++k) {
        term *= xl / ((bl + (long double)(k - 1)) * (long double)k);
        sum += term;
        long double mag = term < 0 ? -term : term;
        if (mag < 1e-25L * (sum < 0 ? -sum : sum) + 1e-300L) break;
    }
    return (double)sum;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// (2pi)^{-1} * integral over the circle of exp(i c cos t) dt, by the N-point
// rectangle rule on the full period. The integrand is entire and periodic, so
// the rule converges geometrically; N is doubled until two refinements agree.
// The imaginary part cancels by the t -> -t symmetry; the real part is kept.
double circle_phase_average(double c) {
    if (c < 0) c = -c;
    if (c == 0) return 1.0;
    std::size_t n = 64;
    while ((double)n < 4.0 * c + 64.0) n *= 2;
    auto value = [c](std::size_t pts) {
        double s = 0;
        for (std::size_t j = 0; j < pts; ++j)
            s += std::cos(c * std::cos(kTwoPi * (double)j / (double)pts));
        return s / (double)pts;
    };
    double prev = value(n);
    for (int round = 0; round < 8; ++round) {
        n *= 2;
        double next = value(n);
        double diff = next - prev;
        if (diff < 0) diff = -diff;
        prev = next;
        if (diff <= 1e-14) return next;
    }
    return prev;
}

// Average of exp(i Re<w, xi>) over the unit sphere of C^m (m >= 2) with
// |w| = c: the first coordinate of a uniform point has Beta(1, m-1)
// squared modulus and uniform phase, so the average is
//   integral_0^1 J(c u) 2 (m-1) u (1-u^2)^{m-2} du
// with J the circle average above. Doubling Simpson on [0, 1].
double sphere_phase_average(double c, int m) {
    if (c < 0) c = -c;
    if (c == 0) return 1.0;
    auto integrand = [c, m](double u) {
        double w = 2.0 * (double)(m - 1) * u;
        for (int e = 0; e < m - 2; ++e) w *= (1.0 - u * u);
        return w * circle_phase_average(c * u);
    };
    auto simpson = [&](std::size_t intervals) {
        double h = 1.0 / (double)intervals;
        double s = integrand(0.0) + integrand(1.0);
        for (std::size_t j = 1; j < intervals; ++j)
            s += integrand(h * (double)j) * (j % 2 == 1 ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    std::size_t n = 64;
    while ((double)n < 2.0 * c + 64.0) n *= 2;
    double prev = simpson(n);
    for (int round = 0; round < 8; ++round) {
        n *= 2;
        double next = simpson(n);
        double diff = next - prev;
        if (diff < 0) diff = -diff;
        prev = next;
        if (diff <= 1e-12) return next;
    }
    return prev;
}

double block_average(const std::vector<std::complex<double>>& omega,
                     const std::vector<std::complex<double>>& z,
                     std::size_t lo, std::size_t hi) {
    double w2 = 0, z2 = 0;
    for (std::size_t j = lo; j < hi; ++j) {
        w2 += std::norm(omega[j]);
        z2 += std::norm(z[j]);
    }
    double c = std::sqrt(w2) * std::sqrt(z2);
    int m = (int)(hi - lo);
    return m == 1 ? circle_phase_average(c) : sphere_phase_average(c, m);
}

} // namespace

std::complex<double> eta_omega(const Family& fam,
                               const std::vector<std::complex<double>>& omega,
                               const std::vector<std::complex<double>>& z) {
    if (omega.empty() || omega.size() != z.size())
        throw domain_error(
            "eta_omega: omega and z must be nonempty vectors of equal length");
    double value = 0;
    if (fam.kind == Family::product) {
        if ((std::size_t)fam.total_n() != z.size())
            throw domain_error("eta_omega: block sizes do not match vectors");
        value = block_average(omega, z, 0, (std::size_t)fam.n1) *
                block_average(omega, z, (std::size_t)fam.n1, z.size());
    } else {
        value = block_average(omega, z, 0, z.size());
    }
    return {value, 0.0};
}

} // namespace hh
