#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "strz/constants.hpp"
#include "strz/fft.hpp"
#include "strz/mixed_norms.hpp"
#include "strz/montecarlo.hpp"
#include "strz/polygauss.hpp"
#include "strz/trial.hpp"
#include "strz/types.hpp"

// Right-hand side of the main inequality,
//   C_{n,k} Int_{R^{nk}} |F^(eta)|^2 K(eta)^{(n(k-1)-2)/2} d eta,
// with F^(eta) = prod_i f^(eta_i), plus the equality / strictness reports.

namespace strz {

/// The k-fold product transform F^ described by its single-particle factor.
struct ProductTransform {
    int k = 2;
    std::optional<FreqProduct> analytic;    // Gaussian or polynomial-Gaussian f^
    std::optional<GridFunction> grid_freq;  // sampled f^

    static ProductTransform from_space_gaussian(const GaussianProfile& g, int k) {
        ProductTransform pt;
        pt.k = k;
        pt.analytic = FreqProduct::from_space_gaussian(g);
        return pt;
    }

    static ProductTransform from_trial(const TrialFunction& trial, int k) {
        ProductTransform pt;
        pt.k = k;
        pt.analytic = trial.to_freq_product();
        return pt;
    }

    static ProductTransform from_grid_factor(const GridFunction& fhat, int k) {
        ProductTransform pt;
        pt.k = k;
        pt.grid_freq = fhat;
        return pt;
    }

    int dim() const {
        return analytic ? analytic->dim() : grid_freq->n;
    }
};

struct FunctionalEstimate {
    double value = 0.0;
    double stderr_of_value = 0.0;
};

namespace detail {

/// Exact flattened-CDF tables for sampling the piecewise-constant density
/// proportional to |f^|^2 over the frequency grid.
struct GridSampler {
    const GridFunction* grid;
    std::vector<double> cdf;   // prefix sums of |f^|^2 over cells
    double total = 0.0;        // sum |f^|^2 (no measure weight)

    explicit GridSampler(const GridFunction& g) : grid(&g) {
        cdf.resize(g.samples.size());
        double run = 0.0;
        for (std::size_t i = 0; i < g.samples.size(); ++i) {
            run += std::norm(g.samples[i]);
            cdf[i] = run;
        }
        total = run;
        if (!(total > 0.0))
            throw std::domain_error("rhs_functional: non-normalizable grid factor");
    }

    /// Draws one point of R^n; consumes 1 + n uniforms.
    void draw(Rng& rng, double* out) const {
        const double u = rng.next_uniform() * total;
        const std::size_t cell =
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
        std::size_t rem = std::min(cell, cdf.size() - 1);
        const int N = grid->points_per_axis;
        const double h = grid->space_step();
        for (int a = grid->n - 1; a >= 0; --a) {
            const int i = static_cast<int>(rem % N);
            rem /= N;
            out[a] = grid->coord(i) + (rng.next_uniform() - 0.5) * h;
        }
    }
};

} // namespace detail

/// Monte Carlo (or closed-form) evaluation of the main functional. The
/// importance proposal is the product Gaussian |f^|^2 / Z itself, so the
/// estimator averages only the low-dimensional statistic K^power. For
/// polynomial-Gaussian trials the Gaussian part is the proposal and the
/// polynomial modulus squared rides along as a weight; grid factors are
/// sampled exactly from their piecewise-constant surrogate density.
inline FunctionalEstimate rhs_functional(const ProductTransform& pt,
                                         const StrichartzCase& cas,
                                         const MonteCarloSpec& mc = {}) {
    if (cas.k < 2) throw std::domain_error("rhs_functional: not a Theorem-1 case");
    if (pt.k != cas.k) throw std::invalid_argument("rhs_functional: factor count mismatch");
    if (pt.dim() != cas.n) throw std::invalid_argument("rhs_functional: dimension mismatch");
    const double power = cas.kernel_power();
    if (power < 0.0) throw std::domain_error("rhs_functional: negative kernel power");
    const double c_nk = sharp_constant(cas.n, cas.k);
    const int n = cas.n;
    const int k = cas.k;

    FunctionalEstimate est;

    if (pt.analytic) {
        const FreqProduct& fp = *pt.analytic;
        const double z1 = fp.l2_norm_squared();
        if (!(z1 > 0.0) || !std::isfinite(z1))
            throw std::domain_error("rhs_functional: non-normalizable factor");
        if (power == 0.0) {
            est.value = c_nk * std::pow(z1, k);
            return est;
        }
        // Gaussian part of each axis factor: |e^{a w^2 + c w}|^2 is the
        // normal density with mean -Re c / (2 Re a), variance -1/(4 Re a).
        std::vector<double> mu(n), sigma(n);
        double z_gauss = 1.0;
        bool any_poly = false;
        for (int a = 0; a < n; ++a) {
            const auto& f = fp.factors[a];
            const double ra = f.a.real();
            mu[a] = -f.c.real() / (2.0 * ra);
            sigma[a] = std::sqrt(-1.0 / (4.0 * ra));
            PolyGauss1D gauss_only = f;
            gauss_only.poly = Poly{Complex(1.0, 0.0)};
            z_gauss *= l2_norm_sq(gauss_only);
            if (f.degree() > 0) any_poly = true;
        }
        const double scale = c_nk * std::pow(z_gauss, k);
        auto sample_fn = [&, n, k](Rng& rng) {
            thread_local std::vector<double> eta;
            eta.resize(static_cast<std::size_t>(n) * k);
            double w = 1.0;
            for (int i = 0; i < k; ++i)
                for (int a = 0; a < n; ++a) {
                    const double x = mu[a] + sigma[a] * rng.next_normal();
                    eta[static_cast<std::size_t>(i) * n + a] = x;
                    if (any_poly && fp.factors[a].degree() > 0) {
                        Complex p(0.0, 0.0);
                        const Poly& poly = fp.factors[a].poly;
                        for (std::size_t j = poly.size(); j-- > 0;) p = p * x + poly[j];
                        w *= std::norm(p);
                    }
                }
            const double kval = kernel_K_flat(eta.data(), k, n);
            return w * std::pow(kval, power);
        };
        const MeanEstimate me = chunked_mean(mc, sample_fn);
        est.value = scale * me.mean;
        est.stderr_of_value = scale * me.stderr_of_mean;
        return est;
    }

    // grid factor
    const GridFunction& gf = *pt.grid_freq;
    detail::GridSampler sampler(gf);
    const double z1 = sampler.total * gf.cell_measure();
    if (power == 0.0) {
        est.value = c_nk * std::pow(z1, k);
        return est;
    }
    const double scale = c_nk * std::pow(z1, k);
    auto sample_fn = [&, n, k](Rng& rng) {
        thread_local std::vector<double> eta;
        eta.resize(static_cast<std::size_t>(n) * k);
        for (int i = 0; i < k; ++i) sampler.draw(rng, eta.data() + static_cast<std::size_t>(i) * n);
        return std::pow(kernel_K_flat(eta.data(), k, n), power);
    };
    const MeanEstimate me = chunked_mean(mc, sample_fn);
    est.value = scale * me.mean;
    est.stderr_of_value = scale * me.stderr_of_mean;
    return est;
}

/// Deterministic tensor-product quadrature cross-check, nk <= 6 only.
inline double rhs_functional_quadrature(const FreqProduct& factor,
                                        const StrichartzCase& cas,
                                        int nodes_per_dim = 48) {
    const int n = cas.n, k = cas.k;
    const int dims = n * k;
    if (dims > 6) throw std::domain_error("rhs_functional_quadrature: nk must be <= 6");
    const double power = cas.kernel_power();
    // per-axis window: mean +/- 9 sigma of the Gaussian part
    std::vector<double> lo(n), hi(n);
    for (int a = 0; a < n; ++a) {
        const auto& f = factor.factors[a];
        const double mu = -f.c.real() / (2.0 * f.a.real());
        const double sg = std::sqrt(-1.0 / (4.0 * f.a.real()));
        lo[a] = mu - 9.0 * sg;
        hi[a] = mu + 9.0 * sg;
    }
    const auto& rule = GaussLegendre::get(nodes_per_dim);
    std::vector<int> idx(dims, 0);
    std::vector<double> eta(dims);
    double sum = 0.0;
    while (true) {
        double w = 1.0;
        for (int d = 0; d < dims; ++d) {
            const int a = d % n;
            const double mid = 0.5 * (hi[a] + lo[a]);
            const double half = 0.5 * (hi[a] - lo[a]);
            eta[d] = mid + half * rule.nodes[idx[d]];
            w *= half * rule.weights[idx[d]];
        }
        double dens = 1.0;
        for (int i = 0; i < k; ++i)
            for (int a = 0; a < n; ++a) {
                const Complex v = factor.factors[a].eval(eta[static_cast<std::size_t>(i) * n + a]);
                dens *= std::norm(v);
            }
        sum += w * dens * std::pow(kernel_K_flat(eta.data(), k, n), power);
        int d = dims - 1;
        while (d >= 0 && ++idx[d] == nodes_per_dim) idx[d--] = 0;
        if (d < 0) break;
    }
    return sharp_constant(n, k) * sum;
}

enum class EqualityMode { expect_equality, expect_strict };

inline RatioReport finish_theorem1_report(double lhs, double lhs_err,
                                          const FunctionalEstimate& rhs,
                                          EqualityMode mode, double tolerance) {
    RatioReport rep = make_ratio_report(lhs, rhs.value, lhs_err, rhs.stderr_of_value,
                                        1.0, tolerance);
    if (mode == EqualityMode::expect_equality) {
        rep.tolerance = std::max(tolerance, 3.0 * rep.ratio_err());
        rep.verdict = equality_verdict(rep);
    } else {
        rep.verdict = strictness_verdict(rep);
    }
    return rep;
}

/// Equality / strictness report for the main inequality at q = r = 2k:
/// lhs = ||u||_{2k}^{2k}, rhs = the functional.
inline RatioReport theorem1_report(const GaussianProfile& f, const StrichartzCase& cas,
                                   const MonteCarloSpec& mc = {},
                                   const TimeQuadratureSpec& quad = {},
                                   double tolerance = 1e-8) {
    const FreqProduct fp = FreqProduct::from_space_gaussian(f);
    const double q = 2.0 * cas.k;
    const NormResult nr = strichartz_norm(fp, q, q, quad);
    const double lhs = std::pow(nr.value, q);
    const double lhs_err = lhs > 0.0 ? lhs * q * (nr.error / nr.value) : 0.0;
    const FunctionalEstimate rhs = rhs_functional(ProductTransform::from_space_gaussian(f, cas.k), cas, mc);
    return finish_theorem1_report(lhs, lhs_err, rhs, EqualityMode::expect_equality, tolerance);
}

inline RatioReport theorem1_report(const TrialFunction& trial, const StrichartzCase& cas,
                                   const MonteCarloSpec& mc = {},
                                   const TimeQuadratureSpec& quad = {},
                                   double tolerance = 1e-8) {
    const FreqProduct fp = trial.to_freq_product();
    const double q = 2.0 * cas.k;
    const NormResult nr = strichartz_norm(fp, q, q, quad);
    const double lhs = std::pow(nr.value, q);
    const double lhs_err = lhs > 0.0 ? lhs * q * (nr.error / nr.value) : 0.0;
    ProductTransform pt;
    pt.k = cas.k;
    pt.analytic = fp;
    const FunctionalEstimate rhs = rhs_functional(pt, cas, mc);
    const EqualityMode mode = trial.is_pure_gaussian() ? EqualityMode::expect_equality
                                                       : EqualityMode::expect_strict;
    return finish_theorem1_report(lhs, lhs_err, rhs, mode, tolerance);
}

inline RatioReport theorem1_report(const GridFunction& f, const StrichartzCase& cas,
                                   const MonteCarloSpec& mc = {},
                                   const GridStrichartzOptions& opt = {},
                                   EqualityMode mode = EqualityMode::expect_strict,
                                   double tolerance = 1e-6) {
    const double q = 2.0 * cas.k;
    const NormResult nr = strichartz_norm(f, q, q, opt);
    const double lhs = std::pow(nr.value, q);
    const double lhs_err = lhs > 0.0 ? lhs * q * (nr.error / nr.value) : 0.0;
    const GridFunction fhat = fourier_forward(f);
    const FunctionalEstimate rhs = rhs_functional(ProductTransform::from_grid_factor(fhat, cas.k), cas, mc);
    return finish_theorem1_report(lhs, lhs_err, rhs, mode, tolerance);
}

/// Classical sharp-Strichartz ratio ||u||_{q,r} / ||f||_2 against the
/// tabulated constant for the three low-dimensional cases.
inline RatioReport classical_strichartz_report(const GaussianProfile& f,
                                               const std::string& case_id,
                                               const TimeQuadratureSpec& quad = {},
                                               double tolerance = 1e-8) {
    const CorollaryCase& c = corollary_case(case_id);
    if (c.kind != CaseKind::strichartz)
        throw std::invalid_argument("classical_strichartz_report: not a classical case id");
    if (c.n != f.n) throw std::invalid_argument("dimension mismatch for case " + case_id);
    const FreqProduct fp = FreqProduct::from_space_gaussian(f);
    const NormResult nr = strichartz_norm(fp, c.q, c.r, quad);
    const double mass = fp.l2_norm();
    RatioReport rep = make_ratio_report(nr.value, mass, nr.error, 0.0, c.constant, tolerance);
    return rep;
}

/// Sobolev-Strichartz report: lhs the mixed norm, rhs the tabulated constant
/// times ||grad f||^alpha ||f||^beta.
inline RatioReport sobolev_strichartz_report(const GaussianProfile& f,
                                             const std::string& case_id,
                                             const TimeQuadratureSpec& quad = {},
                                             double tolerance = 1e-6) {
    const CorollaryCase& c = corollary_case(case_id);
    if (c.kind != CaseKind::sobolev)
        throw std::invalid_argument("sobolev_strichartz_report: unknown sobolev case " + case_id);
    if (c.n != f.n) throw std::invalid_argument("dimension mismatch for case " + case_id);
    const FreqProduct fp = FreqProduct::from_space_gaussian(f);
    const NormResult nr = strichartz_norm(fp, c.q, c.r, quad);
    const double grad = fp.grad_norm();
    const double mass = fp.l2_norm();
    const double rhs = c.constant * std::pow(grad, c.grad_alpha) * std::pow(mass, c.mass_beta);
    RatioReport rep = make_ratio_report(nr.value, rhs, nr.error, 0.0, 1.0, tolerance);
    return rep;
}

} // namespace strz
