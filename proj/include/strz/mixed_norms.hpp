#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "strz/constants.hpp"
#include "strz/fft.hpp"
#include "strz/polygauss.hpp"
#include "strz/propagator.hpp"
#include "strz/quadrature.hpp"
#include "strz/types.hpp"

// Mixed space-time norms ||u||_{L^q_t L^r_x}. The t-integrand of Gaussian
// data decays algebraically; t = tan(theta) maps the line to a compact
// interval on which the transformed integrand is smooth, so node-doubling
// Gauss-Legendre converges spectrally with no truncation bookkeeping.

namespace strz {

struct TimeQuadratureSpec {
    double rel_tol = 1e-9;
    int nodes = 65;          // initial node count, doubled adaptively
    int max_nodes = 8193;
};

struct NormResult {
    double value = 0.0;
    double error = 0.0;
    bool reliable = true;
};

/// Riemann-sum L^r norm of a grid slice, 1 <= r < infinity.
inline double spatial_norm(const GridFunction& slice, double r) {
    if (!(r >= 1.0) || std::isinf(r))
        throw std::domain_error("spatial_norm: requires 1 <= r < infinity");
    double s = 0.0;
    for (const auto& z : slice.samples) {
        const double m = std::abs(z);
        if (m > 0.0) s += std::pow(m, r);
    }
    return std::pow(s * slice.cell_measure(), 1.0 / r);
}

/// Exponent validity for the mixed-norm operations: admissible pairs, the
/// Theorem-1 diagonal pairs q = r = 2k, and the tabulated Sobolev pairs.
inline bool strichartz_pair_supported(int n, double q, double r) {
    if (admissible(q, r, n)) return true;
    if (q == r && q >= 4.0 && std::fabs(q - 2.0 * std::lround(q / 2.0)) < 1e-12) {
        const int k = static_cast<int>(std::lround(q / 2.0));
        if (k >= 2 && !(n == 1 && k == 2)) return true;
    }
    for (const auto& c : corollary_cases())
        if (c.kind == CaseKind::sobolev && c.n == n && c.q == q && c.r == r) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Closed-form path: frequency-side factor products (Gaussians and
// polynomial-Gaussian trials).
// ---------------------------------------------------------------------------

/// ||u||_{L^q_t L^r_x} for the evolved FreqProduct; spatial integrals are
/// exact, the t-integral uses the tan substitution.
inline NormResult strichartz_norm(const FreqProduct& fp, double q, double r,
                                  const TimeQuadratureSpec& spec = {}) {
    if (!strichartz_pair_supported(fp.dim(), q, r))
        throw std::domain_error("strichartz_norm: unsupported exponent pair");
    auto integrand = [&](double t) {
        const double sr = fp.spatial_norm_pow(t, r);
        return sr > 0.0 ? std::pow(sr, q / r) : 0.0;
    };
    const QuadResult qr = integrate_real_line(integrand, spec.rel_tol, spec.nodes,
                                              spec.max_nodes);
    NormResult res;
    if (qr.value <= 0.0) return res;
    res.value = std::pow(qr.value, 1.0 / q);
    res.error = res.value / q * (qr.error / qr.value);
    res.reliable = qr.converged;
    return res;
}

inline NormResult strichartz_norm(const GaussianProfile& g, double q, double r,
                                  const TimeQuadratureSpec& spec = {}) {
    return strichartz_norm(FreqProduct::from_space_gaussian(g), q, r, spec);
}

/// Independent oracle for centered real-covariance Gaussians e^{A0 |x|^2}:
/// with s = q n (r - 2) / (4 r),
///   ||u||_q^q = (pi / (-r A0))^{n q / (2r)} * sqrt(pi) Gamma(s - 1/2)
///               / (4 |A0| Gamma(s)).
inline double centered_gaussian_strichartz_pow(int n, double A0, double q, double r) {
    if (!(A0 < 0.0)) throw std::domain_error("requires A0 < 0");
    const double s = q * n * (r - 2.0) / (4.0 * r);
    if (!(s > 0.5)) throw std::domain_error("divergent time integral");
    const double prefac = std::pow(pi_v / (-r * A0), 0.5 * n * q / r);
    const double tint = std::sqrt(pi_v) * gamma_fn(s - 0.5) / (4.0 * std::fabs(A0) * gamma_fn(s));
    return prefac * tint;
}

// ---------------------------------------------------------------------------
// Grid path. Spatial slices for small |t| come from the Fourier multiplier;
// once dispersion would push mass into the box boundary the dispersive
// factorization u(t) = M(t) D(t) F M(t) f evaluates the same norm from a
// chirped transform of the initial data on the original box:
//   ||u(t)||_r^r = (2|t|)^{n - n r/2} || F[e^{i|y|^2/(4t)} f] ||_{L^r}^r.
// ---------------------------------------------------------------------------

struct GridStrichartzOptions {
    double t_switch = 0.5;    // crossover between multiplier and chirp path
    double rel_tol = 1e-6;
    int nodes = 65;
    int max_nodes = 2049;
};

inline double grid_spatial_norm_pow_chirp(const GridFunction& f, double t, double r) {
    GridFunction g = f;
    const int N = f.points_per_axis;
    const std::size_t total = f.total_points();
    for (std::size_t lin = 0; lin < total; ++lin) {
        std::size_t rem = lin;
        double x2 = 0.0;
        for (int a = f.n - 1; a >= 0; --a) {
            const int i = static_cast<int>(rem % N);
            rem /= N;
            const double x = f.coord(i);
            x2 += x * x;
        }
        const double phase = x2 / (4.0 * t);
        g.samples[lin] *= Complex(std::cos(phase), std::sin(phase));
    }
    GridFunction gh = fourier_forward(g);
    double s = 0.0;
    for (const auto& z : gh.samples) {
        const double m = std::abs(z);
        if (m > 0.0) s += std::pow(m, r);
    }
    s *= gh.cell_measure();
    return std::pow(2.0 * std::fabs(t), f.n - 0.5 * f.n * r) * s;
}

inline NormResult strichartz_norm(const GridFunction& f, double q, double r,
                                  const GridStrichartzOptions& opt = {}) {
    if (!strichartz_pair_supported(f.n, q, r))
        throw std::domain_error("strichartz_norm: unsupported exponent pair");
    GridFunction fhat = fourier_forward(f);
    const int N = f.points_per_axis;

    // chirp bandwidth L/(2t) must stay clear of the dual Nyquist width
    const double t_chirp_min = 2.0 * f.half_width * f.half_width / (pi_v * N);
    if (t_chirp_min > opt.t_switch)
        throw std::invalid_argument("strichartz_norm: grid too coarse for the far-time path");

    bool reliable = true;
    // boundary check at the crossover, where direct-path spreading peaks
    {
        GridFunction u = evolve_grid(f, opt.t_switch);
        if (boundary_mass_fraction(u) > boundary_mass_threshold) reliable = false;
    }

    auto spatial_pow = [&](double t) {
        if (std::fabs(t) <= opt.t_switch) {
            GridFunction uh = fhat;
            const int M = uh.points_per_axis;
            const std::size_t total = uh.total_points();
            for (std::size_t lin = 0; lin < total; ++lin) {
                std::size_t rem = lin;
                double w2 = 0.0;
                for (int a = uh.n - 1; a >= 0; --a) {
                    const int i = static_cast<int>(rem % M);
                    rem /= M;
                    const double w = uh.coord(i);
                    w2 += w * w;
                }
                const double phase = -t * w2;
                uh.samples[lin] *= Complex(std::cos(phase), std::sin(phase));
            }
            GridFunction u = fourier_inverse(uh);
            double s = 0.0;
            for (const auto& z : u.samples) {
                const double m = std::abs(z);
                if (m > 0.0) s += std::pow(m, r);
            }
            return s * u.cell_measure();
        }
        return grid_spatial_norm_pow_chirp(f, t, r);
    };

    auto integrand = [&](double t) {
        const double sr = spatial_pow(t);
        return sr > 0.0 ? std::pow(sr, q / r) : 0.0;
    };
    const QuadResult qr = integrate_real_line(integrand, opt.rel_tol, opt.nodes,
                                              opt.max_nodes);
    NormResult res;
    if (qr.value <= 0.0) return res;
    res.value = std::pow(qr.value, 1.0 / q);
    res.error = res.value / q * (qr.error / qr.value);
    res.reliable = reliable && qr.converged;
    return res;
}

// ---------------------------------------------------------------------------
// First-moment positivity identity.
// ---------------------------------------------------------------------------

/// Int g(x) g(y) x.y dx dy = |Int x g(x) dx|^2 for real g; always >= 0.
inline double first_moment_cross_term(const GridFunction& g) {
    double max_re = 0.0, max_im = 0.0;
    for (const auto& z : g.samples) {
        max_re = std::max(max_re, std::fabs(z.real()));
        max_im = std::max(max_im, std::fabs(z.imag()));
    }
    if (max_im > 1e-12 * std::max(max_re, 1e-300))
        throw std::invalid_argument("first_moment_cross_term: input must be real-valued");
    const int N = g.points_per_axis;
    std::vector<double> moment(g.n, 0.0);
    const std::size_t total = g.total_points();
    for (std::size_t lin = 0; lin < total; ++lin) {
        std::size_t rem = lin;
        const double v = g.samples[lin].real();
        for (int a = g.n - 1; a >= 0; --a) {
            const int i = static_cast<int>(rem % N);
            rem /= N;
            moment[a] += g.coord(i) * v;
        }
    }
    double s = 0.0;
    for (double m : moment) {
        m *= g.cell_measure();
        s += m * m;
    }
    return s;
}

} // namespace strz
