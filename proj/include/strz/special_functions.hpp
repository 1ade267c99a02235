#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

// Gamma and Dawson implementations. All constants below are closed-form
// verifiable; the gamma routine targets <= 1e-13 relative error for real
// arguments up to ~60, which covers every exponent lattice used here.

namespace strz {

namespace detail {

// Lanczos coefficients, g = 7, 9 terms (Godfrey / Boost flavour).
inline constexpr double lanczos_g = 7.0;
inline constexpr double lanczos_coeff[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

} // namespace detail

/// Gamma function for real x, Lanczos approximation with reflection for x < 0.5.
inline double gamma_fn(double x) {
    if (std::isnan(x)) return x;
    if (x <= 0.0 && x == std::floor(x))
        throw std::domain_error("gamma_fn: nonpositive integer argument");
    if (x < 0.5) {
        // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        const double pi = 3.14159265358979323846;
        return pi / (std::sin(pi * x) * gamma_fn(1.0 - x));
    }
    const double z = x - 1.0;
    double s = detail::lanczos_coeff[0];
    for (int i = 1; i < 9; ++i) s += detail::lanczos_coeff[i] / (z + i);
    const double t = z + detail::lanczos_g + 0.5;
    const double sqrt_two_pi = 2.5066282746310002;
    return sqrt_two_pi * std::pow(t, z + 0.5) * std::exp(-t) * s;
}

/// log Gamma for x > 0, same approximation in log form (avoids overflow).
inline double log_gamma(double x) {
    if (x <= 0.0) throw std::domain_error("log_gamma: requires x > 0");
    if (x < 0.5) {
        const double pi = 3.14159265358979323846;
        return std::log(pi / std::sin(pi * x)) - log_gamma(1.0 - x);
    }
    const double z = x - 1.0;
    double s = detail::lanczos_coeff[0];
    for (int i = 1; i < 9; ++i) s += detail::lanczos_coeff[i] / (z + i);
    const double t = z + detail::lanczos_g + 0.5;
    const double log_sqrt_two_pi = 0.91893853320467274178;
    return log_sqrt_two_pi + (z + 0.5) * std::log(t) - t + std::log(s);
}

/// Dawson integral F(x) = exp(-x^2) * Integral_0^x exp(t^2) dt.
///
/// |x| <= 1: Maclaurin series. 1 < |x| <= 7: the substitution t = x - s turns
/// the defining integral into Integral_0^x exp(-s(2x - s)) ds, a smooth
/// positive integrand handled by fixed Gauss-Legendre on [0, x].
/// |x| > 7: asymptotic series 1/(2x) * sum (2k-1)!! / (2x^2)^k.
inline double dawson(double x) {
    const double ax = std::fabs(x);
    const double sign = (x < 0.0) ? -1.0 : 1.0;
    if (ax <= 1.0) {
        // F(x) = sum_{k>=0} (-2)^k x^(2k+1) / (2k+1)!!
        double term = x;
        double sum = x;
        for (int k = 1; k < 40; ++k) {
            term *= -2.0 * x * x / (2.0 * k + 1.0);
            sum += term;
            if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
        }
        return sum;
    }
    if (ax <= 7.0) {
        // 64-point Gauss-Legendre on s in [0, ax] of exp(-s(2ax - s)).
        // Nodes generated on demand via Newton on Legendre P_64.
        static double nodes[64], weights[64];
        static bool init = false;
        if (!init) {
            const int n = 64;
            const double pi = 3.14159265358979323846;
            for (int i = 0; i < n; ++i) {
                double t = std::cos(pi * (i + 0.75) / (n + 0.5));
                for (int it = 0; it < 100; ++it) {
                    double p0 = 1.0, p1 = t;
                    for (int j = 2; j <= n; ++j) {
                        double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                        p0 = p1;
                        p1 = p2;
                    }
                    double dp = n * (t * p1 - p0) / (t * t - 1.0);
                    double dt = -p1 / dp;
                    t += dt;
                    if (std::fabs(dt) < 1e-15) break;
                }
                double p0 = 1.0, p1 = t;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                double dp = n * (t * p1 - p0) / (t * t - 1.0);
                nodes[i] = t;
                weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
            }
            init = true;
        }
        double sum = 0.0;
        const double half = 0.5 * ax;
        for (int i = 0; i < 64; ++i) {
            const double s = half * (nodes[i] + 1.0);
            sum += weights[i] * std::exp(-s * (2.0 * ax - s));
        }
        return sign * half * sum;
    }
    // asymptotic tail
    const double inv2x2 = 1.0 / (2.0 * ax * ax);
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 20; ++k) {
        term *= (2.0 * k - 1.0) * inv2x2;
        if (term > 1e18) break;
        sum += term;
        if (term < 1e-17 * sum) break;
    }
    return sign * sum / (2.0 * ax);
}

} // namespace strz
