#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strz/special_functions.hpp"
#include "strz/types.hpp"

namespace strz {

inline constexpr double pi_v = 3.14159265358979323846;

/// C_{n,k} = [2^{n(k-1)-1} k^{n/2} pi^{(n(k-1)-2)/2} Gamma(n(k-1)/2)]^{-1}.
inline double sharp_constant(int n, int k) {
    if (n < 1) throw std::domain_error("sharp_constant: requires n >= 1");
    if (k < 2) throw std::domain_error("sharp_constant: requires k >= 2");
    if (n == 1 && k == 2)
        throw std::domain_error("sharp_constant: the case (n,k) = (1,2) is excluded");
    const double m = static_cast<double>(n) * (k - 1);
    const double log_inv = (m - 1.0) * std::log(2.0) + 0.5 * n * std::log(static_cast<double>(k)) +
                           0.5 * (m - 2.0) * std::log(pi_v) + log_gamma(0.5 * m);
    return std::exp(-log_inv);
}

/// (p, r) exponent pair of the weak companion inequality:
/// p = 2nk/(2nk - n - 2), r = 4n/(n(k+1) - 2).
inline std::pair<double, double> weak_exponents(int n, int k) {
    if (n < 1 || k < 2) throw std::domain_error("weak_exponents: requires n >= 1, k >= 2");
    if (n == 1 && k == 2)
        throw std::domain_error("weak_exponents: the case (n,k) = (1,2) is excluded");
    const double p = 2.0 * n * k / (2.0 * n * k - n - 2.0);
    const double r = 4.0 * n / (n * (k + 1.0) - 2.0);
    return {p, r};
}

/// Admissibility of a space-time exponent pair: 2/q + n/r = n/2 with
/// 2 <= q, r <= infinity and (q, r, n) != (2, inf, 2).
inline bool admissible(Exponent q, Exponent r, int n) {
    if (n < 1) return false;
    if (!q.at_least_two() || !r.at_least_two()) return false;
    if (!q.infinite && q.value < 2.0) return false;
    if (n == 2 && !q.infinite && q.value == 2.0 && r.infinite) return false;
    const double scaling = 2.0 * q.reciprocal() + n * r.reciprocal();
    return std::fabs(scaling - 0.5 * n) <= 1e-12;
}

inline bool admissible(double q, double r, int n) {
    return admissible(Exponent(q), Exponent(r), n);
}

/// Pairwise-spread kernel K(eta) = (1/k) sum_{i<j} |eta_i - eta_j|^2.
inline double kernel_K(const std::vector<std::vector<double>>& eta) {
    const std::size_t k = eta.size();
    if (k < 2) throw std::invalid_argument("kernel_K: requires k >= 2 entries");
    const std::size_t n = eta[0].size();
    for (const auto& v : eta)
        if (v.size() != n) throw std::invalid_argument("kernel_K: mismatched entry dimensions");
    double sum = 0.0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            double d2 = 0.0;
            for (std::size_t a = 0; a < n; ++a) {
                const double d = eta[i][a] - eta[j][a];
                d2 += d * d;
            }
            sum += d2;
        }
    return sum / static_cast<double>(k);
}

/// Same kernel through the mean-centered identity |eta|^2 - |sum eta_i|^2 / k.
inline double kernel_K_centered(const std::vector<std::vector<double>>& eta) {
    const std::size_t k = eta.size();
    if (k < 2) throw std::invalid_argument("kernel_K_centered: requires k >= 2 entries");
    const std::size_t n = eta[0].size();
    for (const auto& v : eta)
        if (v.size() != n)
            throw std::invalid_argument("kernel_K_centered: mismatched entry dimensions");
    double norm2 = 0.0;
    double mean2 = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
        double s = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            norm2 += eta[i][a] * eta[i][a];
            s += eta[i][a];
        }
        mean2 += s * s;
    }
    return norm2 - mean2 / static_cast<double>(k);
}

/// Flat-layout centered kernel for hot loops: eta is k blocks of n doubles.
inline double kernel_K_flat(const double* eta, int k, int n) {
    double norm2 = 0.0;
    double mean2 = 0.0;
    for (int a = 0; a < n; ++a) {
        double s = 0.0;
        for (int i = 0; i < k; ++i) {
            const double v = eta[i * n + a];
            norm2 += v * v;
            s += v;
        }
        mean2 += s * s;
    }
    return norm2 - mean2 / k;
}

/// Residual of the closed-form normalization identity behind the kernel
/// measure: C |S^{m-1}| / (2 k^{n/2}) = 1 with m = n(k-1) and
/// C = k^{n/2} Gamma(m/2) / pi^{m/2}. Zero up to rounding.
inline double normalization_residual(int n, int k) {
    if (n < 1 || k < 2) throw std::domain_error("normalization_residual: requires n >= 1, k >= 2");
    const double m = static_cast<double>(n) * (k - 1);
    if (m < 2.0) throw std::domain_error("normalization_residual: requires n(k-1) >= 2");
    const double c_norm = std::pow(static_cast<double>(k), 0.5 * n) * gamma_fn(0.5 * m) /
                          std::pow(pi_v, 0.5 * m);
    const double sphere = 2.0 * std::pow(pi_v, 0.5 * m) / gamma_fn(0.5 * m);
    const double value = c_norm * sphere / (2.0 * std::pow(static_cast<double>(k), 0.5 * n));
    return std::fabs(value - 1.0);
}

/// Beckner's reversed Hardy-Littlewood-Sobolev constant,
/// C(n, lambda) = pi^{lambda/2} Gamma(n/2 + lambda/2)/Gamma(n + lambda/2)
///                * [Gamma(n)/Gamma(n/2)]^{1 + lambda/n}.
inline double beckner_constant(int n, double lambda) {
    if (n < 1) throw std::domain_error("beckner_constant: requires n >= 1");
    if (!(lambda > 0.0)) throw std::domain_error("beckner_constant: requires lambda > 0");
    const double log_c = 0.5 * lambda * std::log(pi_v) + log_gamma(0.5 * n + 0.5 * lambda) -
                         log_gamma(n + 0.5 * lambda) +
                         (1.0 + lambda / n) * (log_gamma(static_cast<double>(n)) -
                                               log_gamma(0.5 * n));
    return std::exp(log_c);
}

// ---------------------------------------------------------------------------
// The tabulated sharp inequalities. Case ids are a fixed, documented string
// table (see README): three classical Strichartz cases, six
// Sobolev-Strichartz cases, two paraboloid and two cone extension cases.
// ---------------------------------------------------------------------------

enum class CaseKind { strichartz, sobolev, paraboloid, cone };

struct CorollaryCase {
    std::string id;
    CaseKind kind;
    int n;              // spatial dimension (ambient surface dim for extensions)
    double q;
    double r;           // = q for extension cases
    double grad_alpha;  // exponent on the gradient norm (sobolev cases)
    double mass_beta;   // exponent on the mass norm
    double constant;    // the sharp constant
};

inline const std::vector<CorollaryCase>& corollary_cases() {
    static const std::vector<CorollaryCase> table = {
        {"n1_q6_r6", CaseKind::strichartz, 1, 6, 6, 0.0, 1.0, std::pow(12.0, -1.0 / 12.0)},
        {"n1_q8_r4", CaseKind::strichartz, 1, 8, 4, 0.0, 1.0, std::pow(2.0, -0.25)},
        {"n2_q4_r4", CaseKind::strichartz, 2, 4, 4, 0.0, 1.0, std::pow(2.0, -0.5)},
        {"sobolev_n1_q10_r10", CaseKind::sobolev, 1, 10, 10, 1.0 / 5.0, 4.0 / 5.0,
         std::pow(2.0 * std::sqrt(5.0) * pi_v, -0.1)},
        {"sobolev_n1_q12_r6", CaseKind::sobolev, 1, 12, 6, 1.0 / 6.0, 5.0 / 6.0,
         std::pow(6.0 * pi_v, -1.0 / 12.0)},
        {"sobolev_n1_q16_r4", CaseKind::sobolev, 1, 16, 4, 1.0 / 8.0, 7.0 / 8.0,
         std::pow(8.0 * pi_v, -1.0 / 16.0)},
        {"sobolev_n2_q6_r6", CaseKind::sobolev, 2, 6, 6, 1.0 / 3.0, 2.0 / 3.0,
         std::pow(12.0 * pi_v, -1.0 / 6.0)},
        {"sobolev_n2_q8_r4", CaseKind::sobolev, 2, 8, 4, 1.0 / 4.0, 3.0 / 4.0,
         std::pow(16.0 * pi_v, -1.0 / 8.0)},
        {"sobolev_n4_q4_r4", CaseKind::sobolev, 4, 4, 4, 1.0 / 2.0, 1.0 / 2.0,
         std::pow(32.0 * pi_v, -1.0 / 4.0)},
        {"parab_n1_q6", CaseKind::paraboloid, 1, 6, 6, 0.0, 1.0,
         std::pow(2.0 * pi_v, -0.5) * std::pow(12.0, -1.0 / 12.0)},
        {"parab_n2_q4", CaseKind::paraboloid, 2, 4, 4, 0.0, 1.0,
         std::pow(4.0 * pi_v, -0.5)},
        {"cone_n2_q6", CaseKind::cone, 2, 6, 6, 0.0, 1.0, std::pow(2.0 * pi_v, 1.0 / 3.0)},
        {"cone_n3_q4", CaseKind::cone, 3, 4, 4, 0.0, 1.0, std::pow(2.0 * pi_v, 0.25)},
    };
    return table;
}

inline const CorollaryCase& corollary_case(const std::string& id) {
    for (const auto& c : corollary_cases())
        if (c.id == id) return c;
    throw std::invalid_argument("unknown case id: " + id);
}

inline double corollary_constant(const std::string& id) {
    return corollary_case(id).constant;
}

} // namespace strz
