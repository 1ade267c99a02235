#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "strz/theorem1.hpp"
#include "strz/trial.hpp"

// Derivative-free search over the trial family and perturbation scans
// certifying local strictness of the sharp ratios.

namespace strz {

/// Functional ids accepted by the search operations: "theorem1_n{n}_k{k}"
/// (power-unit Theorem-1 ratio) or a classical case id from the constants
/// table ("n1_q6_r6", ...), whose ratio is norm / (constant * mass).
struct Functional {
    bool is_theorem1 = true;
    StrichartzCase cas = StrichartzCase::theorem1(1, 3);
    CorollaryCase classical{};

    static Functional parse(const std::string& id) {
        Functional f;
        if (id.rfind("theorem1_n", 0) == 0) {
            const auto kpos = id.find("_k");
            if (kpos == std::string::npos)
                throw std::invalid_argument("unknown functional id: " + id);
            const int n = std::stoi(id.substr(10, kpos - 10));
            const int k = std::stoi(id.substr(kpos + 2));
            f.is_theorem1 = true;
            f.cas = StrichartzCase::theorem1(n, k);
            return f;
        }
        const CorollaryCase& c = corollary_case(id);
        if (c.kind != CaseKind::strichartz)
            throw std::invalid_argument("functional id must be a theorem1 or classical case: " + id);
        f.is_theorem1 = false;
        f.classical = c;
        return f;
    }

    int dim() const { return is_theorem1 ? cas.n : classical.n; }
};

/// Ratio of the named functional at a trial function; deterministic for a
/// fixed MonteCarloSpec seed (common random numbers across evaluations).
inline double ratio_objective(const TrialFunction& trial, const std::string& functional_id,
                              const MonteCarloSpec& mc = {},
                              const TimeQuadratureSpec& quad = {}) {
    const Functional f = Functional::parse(functional_id);
    if (trial.base.n != f.dim())
        throw std::invalid_argument("ratio_objective: trial dimension mismatch");
    if (f.is_theorem1) {
        const RatioReport rep = theorem1_report(trial, f.cas, mc, quad);
        return rep.ratio;
    }
    const FreqProduct fp = trial.to_freq_product();
    const NormResult nr = strichartz_norm(fp, f.classical.q, f.classical.r, quad);
    return nr.value / (f.classical.constant * fp.l2_norm());
}

struct OptimizeResult {
    TrialFunction best;
    double best_ratio = 0.0;
    std::vector<std::pair<int, double>> trace;  // (evaluation index, best-so-far ratio)
    int evaluations = 0;
    bool budget_exhausted = false;
    double simplex_diameter = 0.0;
};

struct SimplexParams {
    double initial_step = 0.08;
    double diameter_tol = 1e-6;
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
    // Gauge fixing: a polynomial perturbation can be compensated by base
    // parameter shifts up to a residual quartic in c, so the maximizer set is
    // a nearly flat valley in these coordinates. The tie-breaker
    // gauge_weight * ||c||^2 selects the canonical c = 0 representation; it
    // is orders of magnitude below the ratio scale away from the valley.
    double gauge_weight = 1e-4;
};

namespace detail {

/// Trial <-> flat parameter vector: (Re A, Im A, Re b_j, Im b_j, Re c_m, Im c_m).
inline std::vector<double> trial_to_params(const TrialFunction& t) {
    std::vector<double> p;
    p.push_back(t.base.A.real());
    p.push_back(t.base.A.imag());
    for (const auto& z : t.base.b) {
        p.push_back(z.real());
        p.push_back(z.imag());
    }
    for (const auto& z : t.hermite_coeffs) {
        p.push_back(z.real());
        p.push_back(z.imag());
    }
    return p;
}

inline TrialFunction params_to_trial(const std::vector<double>& p, int n, int m) {
    GaussianProfile base;
    base.n = n;
    base.A = Complex(p[0], p[1]);
    base.b.resize(n);
    for (int j = 0; j < n; ++j) base.b[j] = Complex(p[2 + 2 * j], p[3 + 2 * j]);
    base.C = Complex(0.0, 0.0);
    std::vector<Complex> coeffs(m);
    for (int i = 0; i < m; ++i)
        coeffs[i] = Complex(p[2 + 2 * n + 2 * i], p[3 + 2 * n + 2 * i]);
    TrialFunction t;
    t.base = base;   // bypass ctor validation; optimizer rejects Re A >= 0 itself
    t.hermite_coeffs = std::move(coeffs);
    return t;
}

} // namespace detail

/// Nelder-Mead over (Re A, Im A, Re b, Im b, Re c, Im c), maximizing the
/// ratio (the normalization constraint is enforced inside the trial
/// evaluation by projection). Deterministic for fixed inputs; the trace of
/// best-so-far ratios is monotone.
inline OptimizeResult optimize(const std::string& functional_id, const TrialFunction& init,
                               int budget, const SimplexParams& sp = {},
                               const MonteCarloSpec& mc = {},
                               const TimeQuadratureSpec& quad = {}) {
    if (budget < 1) throw std::invalid_argument("optimize: budget must be >= 1");
    if (!(init.base.A.real() < 0.0))
        throw std::invalid_argument("optimize: init violates Re(A) < 0");
    const Functional f = Functional::parse(functional_id);
    const int n = f.dim();
    const int m = static_cast<int>(init.hermite_coeffs.size());

    OptimizeResult res;
    res.best_ratio = -1.0;
    int evals = 0;
    double best_ratio_seen = -1.0;
    double best_obj = 1e300;

    auto objective = [&](const std::vector<double>& p) {
        if (evals >= budget) return 1e12;  // budget guard; caller loop stops
        if (!(p[0] < -1e-8)) {
            ++evals;
            return 1e9;
        }
        const TrialFunction t = detail::params_to_trial(p, n, m);
        double ratio;
        try {
            ratio = ratio_objective(t, functional_id, mc, quad);
        } catch (const std::exception&) {
            ++evals;
            return 1e9;
        }
        ++evals;
        if (ratio > best_ratio_seen) {
            best_ratio_seen = ratio;
            res.trace.emplace_back(evals, ratio);
        }
        double c2 = 0.0;
        for (int i = 0; i < m; ++i) {
            const double re = p[2 + 2 * n + 2 * i], im = p[3 + 2 * n + 2 * i];
            c2 += re * re + im * im;
        }
        const double obj = 1.0 - ratio + sp.gauge_weight * c2;
        if (obj < best_obj) {
            best_obj = obj;
            res.best = t;
            res.best_ratio = ratio;
        }
        return obj;
    };

    const std::vector<double> p0 = detail::trial_to_params(init);
    const int dim = static_cast<int>(p0.size());

    std::vector<std::vector<double>> vertex(dim + 1, p0);
    std::vector<double> fval(dim + 1);
    for (int i = 1; i <= dim; ++i) {
        double step = sp.initial_step;
        if (i == 1) step = -sp.initial_step * 0.5;  // keep Re A negative
        vertex[i][i - 1] += step;
    }
    for (int i = 0; i <= dim; ++i) fval[i] = objective(vertex[i]);

    auto diameter = [&]() {
        double d = 0.0;
        for (int i = 1; i <= dim; ++i) {
            double s = 0.0;
            for (int j = 0; j < dim; ++j) {
                const double diff = vertex[i][j] - vertex[0][j];
                s += diff * diff;
            }
            d = std::max(d, std::sqrt(s));
        }
        return d;
    };

    while (evals < budget) {
        // order vertices
        std::vector<int> order(dim + 1);
        for (int i = 0; i <= dim; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) { return fval[a] < fval[b]; });
        {
            std::vector<std::vector<double>> v2(dim + 1);
            std::vector<double> f2(dim + 1);
            for (int i = 0; i <= dim; ++i) {
                v2[i] = vertex[order[i]];
                f2[i] = fval[order[i]];
            }
            vertex = std::move(v2);
            fval = std::move(f2);
        }
        res.simplex_diameter = diameter();
        if (res.simplex_diameter < sp.diameter_tol) break;

        std::vector<double> centroid(dim, 0.0);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) centroid[j] += vertex[i][j] / dim;

        auto blend = [&](double coef) {
            std::vector<double> p(dim);
            for (int j = 0; j < dim; ++j)
                p[j] = centroid[j] + coef * (vertex[dim][j] - centroid[j]);
            return p;
        };

        const std::vector<double> refl = blend(-sp.reflection);
        const double f_refl = objective(refl);
        if (f_refl < fval[0]) {
            const std::vector<double> expan = blend(-sp.reflection * sp.expansion);
            const double f_exp = objective(expan);
            if (f_exp < f_refl) {
                vertex[dim] = expan;
                fval[dim] = f_exp;
            } else {
                vertex[dim] = refl;
                fval[dim] = f_refl;
            }
        } else if (f_refl < fval[dim - 1]) {
            vertex[dim] = refl;
            fval[dim] = f_refl;
        } else {
            const std::vector<double> contr =
                blend(f_refl < fval[dim] ? -sp.reflection * sp.contraction : sp.contraction);
            const double f_con = objective(contr);
            if (f_con < std::min(f_refl, fval[dim])) {
                vertex[dim] = contr;
                fval[dim] = f_con;
            } else {
                for (int i = 1; i <= dim; ++i) {
                    for (int j = 0; j < dim; ++j)
                        vertex[i][j] = vertex[0][j] + sp.shrink * (vertex[i][j] - vertex[0][j]);
                    fval[i] = objective(vertex[i]);
                    if (evals >= budget) break;
                }
            }
        }
    }
    res.simplex_diameter = diameter();
    res.evaluations = evals;
    res.budget_exhausted = evals >= budget && res.simplex_diameter >= sp.diameter_tol;
    return res;
}

/// One scan point per epsilon along a named perturbation direction:
/// "h<m>" sets hermite coefficient c_m = eps; "modulation" shifts Im b_1;
/// "translation" shifts Re b_1; "scaling" rescales A by (1 + eps);
/// "zero" leaves the Gaussian untouched.
inline std::vector<std::pair<double, double>> perturbation_scan(
    const std::string& functional_id, const std::string& direction,
    const std::vector<double>& epsilons, const MonteCarloSpec& mc = {},
    const TimeQuadratureSpec& quad = {}) {
    const Functional f = Functional::parse(functional_id);
    const int n = f.dim();
    std::vector<std::pair<double, double>> out;
    out.reserve(epsilons.size());
    for (double eps : epsilons) {
        TrialFunction t(GaussianProfile::standard(n));
        if (direction.size() > 1 && direction[0] == 'h') {
            const int m = std::stoi(direction.substr(1));
            if (m < 1) throw std::invalid_argument("perturbation_scan: hermite index must be >= 1");
            t.hermite_coeffs.assign(m, Complex(0.0, 0.0));
            t.hermite_coeffs[m - 1] = Complex(eps, 0.0);
        } else if (direction == "modulation") {
            t.base.b[0] += Complex(0.0, eps);
        } else if (direction == "translation") {
            t.base.b[0] += Complex(eps, 0.0);
        } else if (direction == "scaling") {
            if (!(1.0 + eps > 0.1)) throw std::invalid_argument("perturbation_scan: scaling too large");
            t.base.A *= (1.0 + eps);
        } else if (direction == "zero") {
            // pure Gaussian at every epsilon
        } else {
            throw std::invalid_argument("perturbation_scan: unknown direction " + direction);
        }
        out.emplace_back(eps, ratio_objective(t, functional_id, mc, quad));
    }
    return out;
}

} // namespace strz
