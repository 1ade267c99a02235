#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "strz/constants.hpp"
#include "strz/fft.hpp"
#include "strz/types.hpp"

// Free Schrodinger evolution under the convention
//   u(t,x) = (2 pi)^{-n/2} Int e^{i x.w} e^{-i t |w|^2} f^(w) dw,
// exact on the Gaussian family, discrete multiplier on grids.

namespace strz {

/// Unconjugated dot product sum_j v_j^2 of a complex vector.
inline Complex dot_unconj(const std::vector<Complex>& v) {
    Complex s(0.0, 0.0);
    for (const auto& z : v) s += z * z;
    return s;
}

/// Frequency-side parameters of a space-side Gaussian: completing the square
/// in (2 pi)^{-n/2} Int e^{-i w.x} e^{A|x|^2 + b.x + C} dx gives another
/// member of the family with
///   A^ = 1/(4A),  b^ = i b/(2A),  C^ = C - (b.b)/(4A) - (n/2) Log(-2A).
inline GaussianProfile fourier_of_gaussian(const GaussianProfile& g) {
    g.validate();
    GaussianProfile out;
    out.n = g.n;
    out.A = 1.0 / (4.0 * g.A);
    out.b.resize(g.n);
    for (int j = 0; j < g.n; ++j) out.b[j] = Complex(0.0, 1.0) * g.b[j] / (2.0 * g.A);
    out.C = g.C - dot_unconj(g.b) / (4.0 * g.A) -
            0.5 * static_cast<double>(g.n) * std::log(-2.0 * g.A);
    return out;
}

/// Exact evolution of a Gaussian profile. Carries the base profile, the time,
/// and the evolved profile (again in the family, with Re A(t) < 0).
struct EvolvedGaussian {
    GaussianProfile base;
    double t = 0.0;
    GaussianProfile at_t;
    Complex amplitude_factor{1.0, 0.0};  // exp(C(t) - C(0))
};

/// Closed-form free evolution: with frequency-side parameters
/// (alpha, beta, gamma) the Gaussian integral of the solution formula gives
///   A(t) = 1/(4(alpha - i t)),
///   b(t) = -i beta / (2(alpha - i t)),
///   C(t) = gamma - (beta.beta)/(4(alpha - i t)) - (n/2) Log(2(i t - alpha)).
/// 2(i t - alpha) stays in the right half-plane for all real t, so the
/// principal power IS the branch continuous from t = 0; for isotropic data
/// this reduces to u = (1 - 4 i A t)^{-n/2} exp(A|x|^2 / (1 - 4 i A t)).
inline EvolvedGaussian evolve_gaussian(const GaussianProfile& g, double t) {
    g.validate();
    const GaussianProfile freq = fourier_of_gaussian(g);
    const Complex denom = freq.A - Complex(0.0, 1.0) * t;  // alpha - i t
    EvolvedGaussian ev;
    ev.base = g;
    ev.t = t;
    ev.at_t.n = g.n;
    ev.at_t.A = 1.0 / (4.0 * denom);
    ev.at_t.b.resize(g.n);
    for (int j = 0; j < g.n; ++j)
        ev.at_t.b[j] = -Complex(0.0, 1.0) * freq.b[j] / (2.0 * denom);
    ev.at_t.C = freq.C - dot_unconj(freq.b) / (4.0 * denom) -
                0.5 * static_cast<double>(g.n) * std::log(2.0 * (Complex(0.0, 1.0) * t - freq.A));
    ev.amplitude_factor = std::exp(ev.at_t.C - g.C);
    ev.at_t.validate();
    return ev;
}

/// Pointwise value of a Gaussian profile.
inline Complex gaussian_value(const GaussianProfile& g, const std::vector<double>& x) {
    Complex e = g.C;
    double x2 = 0.0;
    for (int j = 0; j < g.n; ++j) {
        x2 += x[j] * x[j];
        e += g.b[j] * x[j];
    }
    e += g.A * x2;
    return std::exp(e);
}

/// ||f||_{L^r}^r of a Gaussian profile (any real r >= 1).
inline double gaussian_lr_norm_pow(const GaussianProfile& g, double r) {
    const double a = -r * g.A.real();
    double rb2 = 0.0;
    for (const auto& z : g.b) rb2 += z.real() * z.real();
    return std::exp(r * g.C.real() + r * r * rb2 / (4.0 * a)) *
           std::pow(pi_v / a, 0.5 * g.n);
}

inline double gaussian_l2_norm(const GaussianProfile& g) {
    return std::sqrt(gaussian_lr_norm_pow(g, 2.0));
}

/// ||grad f||_{L^2} computed in frequency space: || |w| f^ ||_2 with the
/// second moment of |f^|^2 in closed form.
inline double gaussian_grad_norm(const GaussianProfile& g) {
    const GaussianProfile fh = fourier_of_gaussian(g);
    const double a = -2.0 * fh.A.real();
    std::vector<double> c(fh.n);
    double c2 = 0.0;
    for (int j = 0; j < fh.n; ++j) {
        c[j] = 2.0 * fh.b[j].real();
        c2 += c[j] * c[j];
    }
    const double i0 = std::exp(2.0 * fh.C.real() + c2 / (4.0 * a)) *
                      std::pow(pi_v / a, 0.5 * fh.n);
    const double second_moment = (0.5 * fh.n / a + c2 / (4.0 * a * a)) * i0;
    return std::sqrt(second_moment);
}

/// Samples a Gaussian profile on a grid.
inline GridFunction sample_gaussian(const GaussianProfile& g, double L, int N) {
    g.validate();
    GridFunction f(g.n, L, N);
    std::vector<double> x(g.n, 0.0);
    std::vector<int> idx(g.n, 0);
    const std::size_t total = f.total_points();
    for (std::size_t lin = 0; lin < total; ++lin) {
        std::size_t rem = lin;
        for (int a = g.n - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % N);
            rem /= N;
        }
        for (int a = 0; a < g.n; ++a) x[a] = f.coord(idx[a]);
        f.samples[lin] = gaussian_value(g, x);
    }
    return f;
}

/// Box and resolution sized so the profile and its transform both decay
/// below ~1e-16 of their peak before the respective boundaries.
inline void default_grid_for(const GaussianProfile& g, double& L, int& N) {
    auto reach = [](const GaussianProfile& p) {
        double mu = 0.0;
        for (const auto& z : p.b) {
            const double m = std::fabs(z.real() / (2.0 * p.A.real()));
            mu = std::max(mu, m);
        }
        return mu + std::sqrt(38.0 / -p.A.real());
    };
    L = std::ceil(reach(g));
    const double dual_need = reach(fourier_of_gaussian(g));
    int N0 = 256;
    while (pi_v * N0 / (2.0 * L) < dual_need * 1.2 && N0 < (1 << 14)) N0 *= 2;
    N = N0;
}

/// Fraction of the grid's l2 mass sitting in the outermost cell shell;
/// above 1e-10 the evolved grid is considered unreliable.
inline double boundary_mass_fraction(const GridFunction& f) {
    const int N = f.points_per_axis;
    double total = 0.0, edge = 0.0;
    std::vector<int> idx(f.n, 0);
    const std::size_t count = f.total_points();
    for (std::size_t lin = 0; lin < count; ++lin) {
        std::size_t rem = lin;
        bool on_edge = false;
        for (int a = f.n - 1; a >= 0; --a) {
            const int i = static_cast<int>(rem % N);
            rem /= N;
            if (i == 0 || i == N - 1) on_edge = true;
        }
        const double m = std::norm(f.samples[lin]);
        total += m;
        if (on_edge) edge += m;
    }
    return total > 0.0 ? edge / total : 0.0;
}

inline constexpr double boundary_mass_threshold = 1e-10;

/// Fourier-multiplier evolution: forward transform, multiply by
/// e^{-i t |w|^2}, inverse transform. Exact in time up to grid truncation.
inline GridFunction evolve_grid(const GridFunction& f, double t) {
    GridFunction fh = fourier_forward(f);
    const int N = fh.points_per_axis;
    std::vector<int> idx(fh.n, 0);
    const std::size_t total = fh.total_points();
    for (std::size_t lin = 0; lin < total; ++lin) {
        std::size_t rem = lin;
        double w2 = 0.0;
        for (int a = fh.n - 1; a >= 0; --a) {
            const int i = static_cast<int>(rem % N);
            rem /= N;
            const double w = fh.coord(i);
            w2 += w * w;
        }
        const double phase = -t * w2;
        fh.samples[lin] *= Complex(std::cos(phase), std::sin(phase));
    }
    return fourier_inverse(fh);
}

/// ||grad f||_2 for grid data, as || |w| f^ ||_2.
inline double gradient_norm(const GridFunction& f) {
    GridFunction fh = fourier_forward(f);
    const int N = fh.points_per_axis;
    double s = 0.0;
    const std::size_t total = fh.total_points();
    for (std::size_t lin = 0; lin < total; ++lin) {
        std::size_t rem = lin;
        double w2 = 0.0;
        for (int a = fh.n - 1; a >= 0; --a) {
            const int i = static_cast<int>(rem % N);
            rem /= N;
            const double w = fh.coord(i);
            w2 += w * w;
        }
        s += w2 * std::norm(fh.samples[lin]);
    }
    return std::sqrt(s * fh.cell_measure());
}

inline double gradient_norm(const GaussianProfile& g) { return gaussian_grad_norm(g); }

} // namespace strz
