#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "strz/constants.hpp"
#include "strz/propagator.hpp"
#include "strz/types.hpp"

// Exact algebra for one-dimensional functions P(w) e^{a w^2 + c w + d} with
// complex polynomial P and Re(a) < 0. Free evolution, L^2 pairings and even
// L^r norms of such factors are closed-form Gaussian-moment computations, so
// trial functions built from them never touch a grid.

namespace strz {

using Poly = std::vector<Complex>;  // poly[j] is the coefficient of w^j

inline Poly poly_mul(const Poly& p, const Poly& q) {
    if (p.empty() || q.empty()) return {};
    Poly out(p.size() + q.size() - 1, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
}

inline Poly poly_conj(const Poly& p) {
    Poly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = std::conj(p[i]);
    return out;
}

inline Poly poly_pow(const Poly& p, int e) {
    Poly out{Complex(1.0, 0.0)};
    for (int i = 0; i < e; ++i) out = poly_mul(out, p);
    return out;
}

/// Substitute w -> s0 + s1 * x into P(w); returns the polynomial in x.
inline Poly poly_compose_linear(const Poly& p, Complex s0, Complex s1) {
    Poly out{Complex(0.0, 0.0)};
    // Horner: out = p_k, out = out*(s0 + s1 x) + p_{k-1}, ...
    for (std::size_t i = p.size(); i-- > 0;) {
        Poly shifted(out.size() + 1, Complex(0.0, 0.0));
        for (std::size_t j = 0; j < out.size(); ++j) {
            shifted[j] += out[j] * s0;
            shifted[j + 1] += out[j] * s1;
        }
        shifted[0] += p[i];
        out = std::move(shifted);
        while (out.size() > 1 && std::abs(out.back()) == 0.0) out.pop_back();
    }
    return out;
}

/// Physicists' Hermite polynomial H_m as monomial coefficients.
inline Poly hermite_poly(int m) {
    Poly h0{Complex(1.0, 0.0)};
    if (m == 0) return h0;
    Poly h1{Complex(0.0, 0.0), Complex(2.0, 0.0)};
    if (m == 1) return h1;
    for (int j = 2; j <= m; ++j) {
        Poly next(j + 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < h1.size(); ++i) next[i + 1] += 2.0 * h1[i];
        for (std::size_t i = 0; i < h0.size(); ++i) next[i] -= 2.0 * (j - 1.0) * h0[i];
        h0 = std::move(h1);
        h1 = std::move(next);
    }
    return h1;
}

/// One factor P(w) e^{a w^2 + c w + d}.
struct PolyGauss1D {
    Poly poly{Complex(1.0, 0.0)};
    Complex a{-0.5, 0.0};
    Complex c{0.0, 0.0};
    Complex d{0.0, 0.0};

    int degree() const { return static_cast<int>(poly.size()) - 1; }

    Complex eval(double w) const {
        Complex p(0.0, 0.0);
        for (std::size_t i = poly.size(); i-- > 0;) p = p * w + poly[i];
        return p * std::exp(a * w * w + c * w + d);
    }
};

/// Moments m_j = Int w^j e^{a w^2 + c w} dw for complex a (Re a < 0), via
/// m_0 = sqrt(pi/(-a)) e^{-c^2/(4a)} and the integration-by-parts recursion
/// 2a m_{j+1} + c m_j = -j m_{j-1}.
inline std::vector<Complex> gauss_moments(Complex a, Complex c, int jmax) {
    if (!(a.real() < 0.0)) throw std::domain_error("gauss_moments: requires Re(a) < 0");
    std::vector<Complex> m(jmax + 1);
    m[0] = std::sqrt(pi_v / (-a)) * std::exp(-c * c / (4.0 * a));
    if (jmax >= 1) m[1] = -c / (2.0 * a) * m[0];
    for (int j = 1; j < jmax; ++j)
        m[j + 1] = -(c * m[j] + static_cast<double>(j) * m[j - 1]) / (2.0 * a);
    return m;
}

/// Int P(w) e^{a w^2 + c w + d} dw.
inline Complex integrate(const PolyGauss1D& v) {
    const auto m = gauss_moments(v.a, v.c, v.degree());
    Complex s(0.0, 0.0);
    for (std::size_t j = 0; j < v.poly.size(); ++j) s += v.poly[j] * m[j];
    return s * std::exp(v.d);
}

/// Free evolution of a frequency-side factor:
///   u(t,x) = (2 pi)^{-1/2} Int P(w) e^{(a - i t) w^2 + (c + i x) w + d} dw.
/// Writing m_j(y) = R_j(y) m_0(y) with y = c + i x, the moment recursion
/// becomes polynomial, R_{j+1} = -(y R_j + j R_{j-1}) / (2 (a - i t)), and the
/// result is again a PolyGauss1D in x:
///   A' = 1/(4(a-it)), b' = -i c/(2(a-it)),
///   C' = d - c^2/(4(a-it)) - (1/2) Log(-2(a-it)).
inline PolyGauss1D evolve_factor(const PolyGauss1D& f, double t) {
    const Complex at = f.a - Complex(0.0, 1.0) * t;
    const int deg = f.degree();
    // R_j as polynomials in y
    std::vector<Poly> R(deg + 1);
    R[0] = Poly{Complex(1.0, 0.0)};
    if (deg >= 1) R[1] = Poly{Complex(0.0, 0.0), -1.0 / (2.0 * at)};
    for (int j = 1; j < deg; ++j) {
        Poly yRj(R[j].size() + 1, Complex(0.0, 0.0));
        for (std::size_t i = 0; i < R[j].size(); ++i) yRj[i + 1] = R[j][i];
        Poly next(std::max(yRj.size(), R[j - 1].size()), Complex(0.0, 0.0));
        for (std::size_t i = 0; i < yRj.size(); ++i) next[i] += yRj[i];
        for (std::size_t i = 0; i < R[j - 1].size(); ++i)
            next[i] += static_cast<double>(j) * R[j - 1][i];
        for (auto& z : next) z /= -2.0 * at;
        R[j + 1] = std::move(next);
    }
    Poly q{Complex(0.0, 0.0)};
    for (int j = 0; j <= deg; ++j) {
        if (q.size() < R[j].size()) q.resize(R[j].size(), Complex(0.0, 0.0));
        for (std::size_t i = 0; i < R[j].size(); ++i) q[i] += f.poly[j] * R[j][i];
    }
    PolyGauss1D out;
    out.poly = poly_compose_linear(q, f.c, Complex(0.0, 1.0));  // y = c + i x
    out.a = 1.0 / (4.0 * at);
    out.c = -Complex(0.0, 1.0) * f.c / (2.0 * at);
    out.d = f.d - f.c * f.c / (4.0 * at) - 0.5 * std::log(-2.0 * at);
    return out;
}

/// Real-exponent moments Int x^j e^{-alpha x^2 + beta x} dx.
inline std::vector<double> gauss_moments_real(double alpha, double beta, int jmax) {
    if (!(alpha > 0.0)) throw std::domain_error("gauss_moments_real: requires alpha > 0");
    std::vector<double> m(jmax + 1);
    m[0] = std::sqrt(pi_v / alpha) * std::exp(beta * beta / (4.0 * alpha));
    if (jmax >= 1) m[1] = beta / (2.0 * alpha) * m[0];
    for (int j = 1; j < jmax; ++j)
        m[j + 1] = (beta * m[j] + static_cast<double>(j) * m[j - 1]) / (2.0 * alpha);
    return m;
}

/// Int |v(x)|^r dx for even integer r: |v|^r = (P conj(P))^{r/2} times a real
/// Gaussian weight, an exact moment sum. For degree-0 factors any real
/// r >= 1 is supported through the plain Gaussian closed form.
inline double abs_pow_integral(const PolyGauss1D& v, double r) {
    if (!(v.a.real() < 0.0)) throw std::domain_error("abs_pow_integral: requires Re(a) < 0");
    const double alpha = -r * v.a.real();
    const double beta = r * v.c.real();
    const double amp = r * v.d.real();
    if (v.degree() == 0) {
        const double mod = std::pow(std::abs(v.poly[0]), r);
        return mod * std::exp(amp + beta * beta / (4.0 * alpha)) * std::sqrt(pi_v / alpha);
    }
    const int half = static_cast<int>(std::lround(0.5 * r));
    if (std::fabs(r - 2.0 * half) > 1e-12 || half < 1)
        throw std::domain_error("abs_pow_integral: polynomial factors require even integer r");
    const Poly mod2 = poly_mul(v.poly, poly_conj(v.poly));
    const Poly modr = poly_pow(mod2, half);
    const auto m = gauss_moments_real(alpha, beta, static_cast<int>(modr.size()) - 1);
    double s = 0.0;
    for (std::size_t j = 0; j < modr.size(); ++j) s += modr[j].real() * m[j];
    return s * std::exp(amp);
}

inline double l2_norm_sq(const PolyGauss1D& v) { return abs_pow_integral(v, 2.0); }

/// Int x^2 |v(x)|^2 dx.
inline double second_moment_sq(const PolyGauss1D& v) {
    const double alpha = -2.0 * v.a.real();
    const double beta = 2.0 * v.c.real();
    Poly mod2 = poly_mul(v.poly, poly_conj(v.poly));
    Poly shifted(mod2.size() + 2, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < mod2.size(); ++i) shifted[i + 2] = mod2[i];
    const auto m = gauss_moments_real(alpha, beta, static_cast<int>(shifted.size()) - 1);
    double s = 0.0;
    for (std::size_t j = 0; j < shifted.size(); ++j) s += shifted[j].real() * m[j];
    return s * std::exp(2.0 * v.d.real());
}

// ---------------------------------------------------------------------------
// Products of 1-D frequency-side factors: the exact representation used for
// Gaussians and Hermite-polynomial trial functions in any dimension.
// ---------------------------------------------------------------------------

struct FreqProduct {
    std::vector<PolyGauss1D> factors;  // one per axis

    int dim() const { return static_cast<int>(factors.size()); }

    /// Frequency-side factorization of a space-side Gaussian.
    static FreqProduct from_space_gaussian(const GaussianProfile& g) {
        const GaussianProfile fh = fourier_of_gaussian(g);
        return from_freq_gaussian(fh);
    }

    /// Per-axis split of a frequency-side Gaussian profile.
    static FreqProduct from_freq_gaussian(const GaussianProfile& fh) {
        fh.validate();
        FreqProduct fp;
        fp.factors.resize(fh.n);
        for (int j = 0; j < fh.n; ++j) {
            fp.factors[j].poly = Poly{Complex(1.0, 0.0)};
            fp.factors[j].a = fh.A;
            fp.factors[j].c = fh.b[j];
            fp.factors[j].d = fh.C / static_cast<double>(fh.n);
        }
        return fp;
    }

    double l2_norm_squared() const {
        double p = 1.0;
        for (const auto& f : factors) p *= l2_norm_sq(f);
        return p;
    }

    double l2_norm() const { return std::sqrt(l2_norm_squared()); }

    /// || |w| F ||_2^2 = sum_a second_moment_a * prod_{j != a} norm_j^2.
    double grad_norm() const {
        std::vector<double> n2(factors.size());
        for (std::size_t j = 0; j < factors.size(); ++j) n2[j] = l2_norm_sq(factors[j]);
        double total = 0.0;
        for (std::size_t a = 0; a < factors.size(); ++a) {
            double term = second_moment_sq(factors[a]);
            for (std::size_t j = 0; j < factors.size(); ++j)
                if (j != a) term *= n2[j];
            total += term;
        }
        return std::sqrt(total);
    }

    /// ||u(t)||_{L^r}^r of the evolved product at time t.
    double spatial_norm_pow(double t, double r) const {
        double p = 1.0;
        for (const auto& f : factors) p *= abs_pow_integral(evolve_factor(f, t), r);
        return p;
    }
};

} // namespace strz
