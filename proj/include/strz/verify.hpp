#pragma once

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "strz/constants.hpp"
#include "strz/extension.hpp"
#include "strz/fft.hpp"
#include "strz/mixed_norms.hpp"
#include "strz/montecarlo.hpp"
#include "strz/propagator.hpp"
#include "strz/search.hpp"
#include "strz/theorem1.hpp"

// The thirteen-point verification suite behind `strz verify-all` and the
// acceptance binary. Every tolerance is pinned here, in code.

namespace strz::verify {

enum class Profile { quick, full };

struct CheckResult {
    std::string id;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

using ProgressFn = std::function<void(const CheckResult&)>;

namespace detail {

inline double max_rel_err(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

template <typename Fn>
CheckResult timed(const std::string& id, Fn&& fn) {
    CheckResult res;
    res.id = id;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fn(res);
    } catch (const std::exception& e) {
        res.pass = false;
        res.detail = std::string("exception: ") + e.what();
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

}  // namespace detail

/// Independent closed forms for the thirteen tabulated constants, written
/// out directly so a wrong table entry cannot hide.
inline std::vector<std::pair<std::string, double>> golden_constant_forms() {
    const double pi = pi_v;
    return {
        {"n1_q6_r6", std::pow(12.0, -1.0 / 12.0)},
        {"n1_q8_r4", std::pow(2.0, -1.0 / 4.0)},
        {"n2_q4_r4", std::pow(2.0, -1.0 / 2.0)},
        {"sobolev_n1_q10_r10", std::pow(2.0 * std::sqrt(5.0) * pi, -1.0 / 10.0)},
        {"sobolev_n1_q12_r6", std::pow(6.0 * pi, -1.0 / 12.0)},
        {"sobolev_n1_q16_r4", std::pow(8.0 * pi, -1.0 / 16.0)},
        {"sobolev_n2_q6_r6", std::pow(12.0 * pi, -1.0 / 6.0)},
        {"sobolev_n2_q8_r4", std::pow(16.0 * pi, -1.0 / 8.0)},
        {"sobolev_n4_q4_r4", std::pow(32.0 * pi, -1.0 / 4.0)},
        {"parab_n1_q6", std::pow(2.0 * pi, -1.0 / 2.0) * std::pow(12.0, -1.0 / 12.0)},
        {"parab_n2_q4", std::pow(4.0 * pi, -1.0 / 2.0)},
        {"cone_n2_q6", std::pow(2.0 * pi, 1.0 / 3.0)},
        {"cone_n3_q4", std::pow(2.0 * pi, 1.0 / 4.0)},
    };
}

/// Compares a constants table against the independent closed forms at
/// 1e-12 relative; exposed separately so tests can feed mutated tables.
inline bool check_constants_table(const std::vector<std::pair<std::string, double>>& table,
                                  double* worst = nullptr) {
    double w = 0.0;
    bool ok = table.size() == golden_constant_forms().size();
    for (const auto& [id, want] : golden_constant_forms()) {
        bool found = false;
        for (const auto& [tid, got] : table)
            if (tid == id) {
                found = true;
                w = std::max(w, detail::max_rel_err(got, want));
            }
        ok = ok && found;
    }
    if (worst) *worst = w;
    return ok && w <= 1e-12;
}

inline CheckResult criterion_constants() {
    return detail::timed("C01 constants-golden-table", [](CheckResult& res) {
        std::vector<std::pair<std::string, double>> table;
        for (const auto& c : corollary_cases()) table.emplace_back(c.id, c.constant);
        double worst = 0.0;
        bool ok = check_constants_table(table, &worst);
        // additionally tie the theorem constants to the table
        ok = ok && detail::max_rel_err(std::pow(sharp_constant(1, 3), 1.0 / 6.0),
                                       corollary_constant("n1_q6_r6")) <= 1e-12;
        ok = ok && detail::max_rel_err(std::pow(sharp_constant(2, 2), 1.0 / 4.0),
                                       corollary_constant("n2_q4_r4")) <= 1e-12;
        res.pass = ok;
        res.detail = detail::fmt("13 constants, max rel err %.2e (tol 1e-12)", worst);
    });
}

inline CheckResult criterion_theorem1_closed() {
    return detail::timed("C02 theorem1-equality-closed-form", [](CheckResult& res) {
        double worst = 0.0;
        for (auto nk : {std::pair<int, int>{1, 3}, {2, 2}}) {
            GaussianProfile g = GaussianProfile::standard(nk.first);
            RatioReport rep = theorem1_report(g, StrichartzCase::theorem1(nk.first, nk.second));
            worst = std::max(worst, std::fabs(rep.ratio - 1.0));
        }
        res.pass = worst <= 1e-8;
        res.detail = detail::fmt("(1,3),(2,2): max |ratio-1| = %.2e (tol 1e-8)", worst);
    });
}

inline CheckResult criterion_theorem1_montecarlo(Profile profile) {
    return detail::timed("C03 theorem1-equality-monte-carlo", [profile](CheckResult& res) {
        const std::uint64_t samples = profile == Profile::full ? 4000000 : 1000000;
        bool ok = true;
        std::string det;
        double worst_sigma = 0.0;
        for (auto nk : {std::pair<int, int>{1, 4}, {2, 3}, {1, 5}}) {
            GaussianProfile g = GaussianProfile::standard(nk.first);
            MonteCarloSpec mc;
            mc.samples = samples;
            mc.seed = 20240 + nk.second;
            RatioReport rep = theorem1_report(g, StrichartzCase::theorem1(nk.first, nk.second), mc);
            const double sigmas = std::fabs(rep.ratio - 1.0) / std::max(rep.ratio_err(), 1e-300);
            worst_sigma = std::max(worst_sigma, sigmas);
            ok = ok && sigmas <= 3.0;
            ok = ok && rep.rhs_err > 0.0 && rep.rhs_err / rep.rhs <= 0.005;  // 0 < stderr <= 0.5%
        }
        // independent chi-moment oracle for (1,4): E[K^{1/2}] = 2/sqrt(pi)
        {
            GaussianProfile g = GaussianProfile::standard(1);
            MonteCarloSpec mc;
            mc.samples = samples;
            mc.seed = 77;
            auto est = rhs_functional(ProductTransform::from_space_gaussian(g, 4),
                                      StrichartzCase::theorem1(1, 4), mc);
            const double scale = sharp_constant(1, 4) * std::pow(pi_v, 2.0);  // C * Z
            const double mean_sqrtK = est.value / scale;
            const double sigma = est.stderr_of_value / scale;
            const double oracle = 2.0 / std::sqrt(pi_v);
            ok = ok && std::fabs(mean_sqrtK - oracle) <= 3.0 * sigma;
            det = detail::fmt("; chi oracle mean(K^1/2) = %.6f vs 2/sqrt(pi) = %.6f", mean_sqrtK,
                              oracle);
        }
        res.pass = ok;
        res.detail =
            detail::fmt("(1,4),(2,3),(1,5) at %.0f samples: worst deviation %.2f sigma",
                        static_cast<double>(samples), worst_sigma) +
            det;
    });
}

inline CheckResult criterion_strictness() {
    return detail::timed("C04 strictness-off-maximizer", [](CheckResult& res) {
        bool ok = true;
        double margin = 1e300;
        for (auto nk : {std::pair<int, int>{1, 3}, {2, 2}}) {
            TrialFunction trial(GaussianProfile::standard(nk.first),
                                {Complex(0.0, 0.0), Complex(0.5, 0.0)});
            RatioReport rep =
                theorem1_report(trial, StrichartzCase::theorem1(nk.first, nk.second));
            ok = ok && rep.ratio < 1.0 - 3.0 * rep.ratio_err();
            margin = std::min(margin, 1.0 - rep.ratio);
        }
        res.pass = ok;
        res.detail = detail::fmt("hermite-2 trial (c2 = 0.5): min gap 1-ratio = %.4f", margin);
    });
}

inline CheckResult criterion_mixed_norm() {
    return detail::timed("C05 mixed-norm-cases", [](CheckResult& res) {
        GaussianProfile g = GaussianProfile::standard(1);
        RatioReport r84 = classical_strichartz_report(g, "n1_q8_r4");
        RatioReport r66 = classical_strichartz_report(g, "n1_q6_r6");
        const double e84 = std::fabs(r84.ratio - std::pow(2.0, -0.25));
        const double e66 = std::fabs(r66.ratio - std::pow(12.0, -1.0 / 12.0));
        res.pass = e84 <= 1e-8 && e66 <= 1e-8;
        res.detail = detail::fmt("(1,8,4) err %.2e, (1,6,6) err %.2e (tol 1e-8)", e84, e66);
    });
}

inline CheckResult criterion_sobolev() {
    return detail::timed("C06 sobolev-strichartz-equality", [](CheckResult& res) {
        double worst = 0.0;
        int count = 0;
        for (const auto& c : corollary_cases()) {
            if (c.kind != CaseKind::sobolev) continue;
            GaussianProfile g = GaussianProfile::standard(c.n);
            RatioReport rep = sobolev_strichartz_report(g, c.id);
            worst = std::max(worst, std::fabs(rep.ratio - 1.0));
            ++count;
        }
        res.pass = worst <= 1e-6 && count == 6;
        res.detail = detail::fmt("%.0f cases: max |ratio-1| = %.2e (tol 1e-6)",
                                 static_cast<double>(count), worst);
    });
}

inline CheckResult criterion_cone_weights(Profile profile) {
    return detail::timed("C07 cone-weight-invariance", [profile](CheckResult& res) {
        Rng rng(424242);
        double worst_pair = 0.0;
        const int n_pair = profile == Profile::full ? 15 : 10;
        for (int i = 0; i < n_pair; ++i) {
            const double tau = 0.5 + 3.5 * rng.next_uniform();
            const double w = tau * 0.9 * rng.next_uniform();
            const double cth = 2.0 * rng.next_uniform() - 1.0;
            const double phi = 2.0 * pi_v * rng.next_uniform();
            const double sth = std::sqrt(1.0 - cth * cth);
            const double val = cone_pair_weight(
                tau, {w * sth * std::cos(phi), w * sth * std::sin(phi), w * cth});
            worst_pair = std::max(worst_pair, detail::max_rel_err(val, 2.0 * pi_v));
        }
        double worst_triple = 0.0;
        for (int i = 0; i < 5; ++i) {
            const double tau = 0.8 + 2.5 * rng.next_uniform();
            const double w = tau * 0.8 * rng.next_uniform();
            const double psi = 2.0 * pi_v * rng.next_uniform();
            const double val =
                cone_triple_weight(tau, {w * std::cos(psi), w * std::sin(psi)});
            worst_triple = std::max(worst_triple, detail::max_rel_err(val, 4.0 * pi_v * pi_v));
        }
        res.pass = worst_pair <= 1e-6 && worst_triple <= 1e-3;
        res.detail = detail::fmt("pair worst rel err %.2e (tol 1e-6), triple %.2e (tol 1e-3)",
                                 worst_pair, worst_triple);
    });
}

inline CheckResult criterion_cone_sharp() {
    return detail::timed("C08 cone-sharp-equality", [](CheckResult& res) {
        SurfaceFunction c3 = SurfaceFunction::exp_family(SurfaceKind::cone, 3, Complex(-1.0, 0.0),
                                                         {}, Complex(0.0, 0.0));
        RatioReport r3 = extension_ratio_report(c3, "cone_n3_q4");
        const double e3 = detail::max_rel_err(r3.lhs, 2.0 * std::pow(pi_v, 3.0));

        SurfaceFunction c2 = SurfaceFunction::exp_family(SurfaceKind::cone, 2, Complex(-1.0, 0.0),
                                                         {}, Complex(0.0, 0.0));
        RatioReport r2 = extension_ratio_report(c2, "cone_n2_q6");
        const double e2 = detail::max_rel_err(r2.lhs, 4.0 * std::pow(pi_v, 5.0));

        SurfaceFunction wrong = SurfaceFunction::radial_gaussian(SurfaceKind::cone, 3, 1.0);
        RatioReport rw = extension_ratio_report(wrong, "cone_n3_q4");
        const bool strict = rw.ratio < 1.0 - 3.0 * rw.ratio_err();

        res.pass = e3 <= 1e-3 && e2 <= 5e-3 && strict;
        res.detail = detail::fmt("n3 lhs err %.2e (tol 1e-3), n2 lhs err %.2e (tol 5e-3)", e3, e2) +
                     detail::fmt(", wrong-profile ratio %.4f < 1", rw.ratio);
    });
}

inline CheckResult criterion_paraboloid_sharp() {
    return detail::timed("C09 paraboloid-sharp-equality", [](CheckResult& res) {
        SurfaceFunction p2 = SurfaceFunction::exp_family(SurfaceKind::paraboloid, 2,
                                                         Complex(-0.5, 0.0), {}, Complex(0.0, 0.0));
        RatioReport rep = extension_ratio_report(p2, "parab_n2_q4");
        const double err = detail::max_rel_err(rep.lhs, 1.0 / 16.0);
        res.pass = err <= 1e-6;
        res.detail = detail::fmt("lhs = %.9f vs 1/16, rel err %.2e (tol 1e-6)", rep.lhs, err);
    });
}

inline CheckResult criterion_identities() {
    return detail::timed("C10 algebraic-identities", [](CheckResult& res) {
        bool ok = true;
        double worst_norm = 0.0;
        for (int n = 1; n <= 4; ++n)
            for (int k = 2; k <= 6; ++k) {
                if (n == 1 && k == 2) continue;
                worst_norm = std::max(normalization_residual(n, k), worst_norm);
            }
        ok = ok && worst_norm <= 1e-12;

        // kernel identity on 1000 random tuples
        Rng rng(7);
        double worst_kernel = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const int k = 2 + static_cast<int>(rng.next_u64() % 5);
            const int n = 1 + static_cast<int>(rng.next_u64() % 3);
            std::vector<std::vector<double>> eta(k, std::vector<double>(n));
            for (auto& v : eta)
                for (auto& x : v) x = 3.0 * rng.next_normal();
            worst_kernel =
                std::max(worst_kernel, std::fabs(kernel_K(eta) - kernel_K_centered(eta)));
        }
        ok = ok && worst_kernel <= 1e-12;  // absolute

        // propagator properties on a grid
        GaussianProfile g = GaussianProfile::standard(1);
        GridFunction f = sample_gaussian(g, 14.0, 1024);
        const double mass = grid_l2_norm(f);
        GridFunction fh = fourier_forward(f);
        const double parseval = std::fabs(grid_l2_norm(fh) - mass);
        GridFunction back = fourier_inverse(fh);
        double roundtrip = 0.0;
        for (std::size_t i = 0; i < f.samples.size(); ++i)
            roundtrip = std::max(roundtrip, std::abs(back.samples[i] - f.samples[i]));
        GridFunction u1 = evolve_grid(evolve_grid(f, 0.2), 0.3);
        GridFunction u2 = evolve_grid(f, 0.5);
        double group = 0.0;
        for (std::size_t i = 0; i < f.samples.size(); ++i)
            group = std::max(group, std::abs(u1.samples[i] - u2.samples[i]));
        const double unitarity = std::fabs(grid_l2_norm(u2) - mass);
        ok = ok && parseval <= 1e-12 * mass && roundtrip <= 1e-12 && group <= 1e-10 &&
             unitarity <= 1e-12 * mass;
        res.pass = ok;
        res.detail = detail::fmt("norm residual %.1e, kernel %.1e", worst_norm, worst_kernel) +
                     detail::fmt(", parseval %.1e, group law %.1e", parseval, group);
    });
}

inline CheckResult criterion_optimizer() {
    return detail::timed("C11 optimizer-recovery", [](CheckResult& res) {
        TrialFunction init(GaussianProfile::standard(1),
                           {Complex(0.0, 0.0), Complex(0.3, 0.0)});
        OptimizeResult opt = optimize("theorem1_n1_k3", init, 500);
        res.pass = opt.best_ratio >= 0.999 && opt.best.coeff_norm() <= 0.02 &&
                   opt.evaluations <= 500;
        res.detail = detail::fmt("ratio %.7f (>= 0.999), ||c|| = %.5f (<= 0.02), %g evals",
                                 opt.best_ratio, opt.best.coeff_norm(),
                                 static_cast<double>(opt.evaluations));
    });
}

/// The reversed-HLS desk check at the maximizer h(x) = (1 + x^2)^{-3/2},
/// n = 1, lambda = 1: Int Int |x-y| h h / (C(1,1) (Int h^{2/3})^2) = 1.
inline double beckner_desk_ratio(double rel_tol = 1e-6) {
    const double half_pi = 1.57079632679489661923;
    auto h = [](double x) { return std::pow(1.0 + x * x, -1.5); };
    // Int |x - y| h(y) dy in y = tan(theta) coordinates, anchored where h
    // concentrates, split exactly at the kink y = x.
    auto inner = [&](double x) {
        auto g = [&](double th) {
            const double c = std::cos(th);
            if (std::fabs(c) < 1e-14) return 0.0;
            const double y = std::tan(th);
            return std::fabs(x - y) * h(y) / (c * c);
        };
        const double th_x = std::atan(x);
        auto left = gl_adaptive(g, -half_pi, th_x, rel_tol * 0.01, 65);
        auto right = gl_adaptive(g, th_x, half_pi, rel_tol * 0.01, 65);
        return left.value + right.value;
    };
    auto lhs = integrate_real_line([&](double x) { return h(x) * inner(x); }, rel_tol, 65);
    auto mass = integrate_real_line([&](double x) { return std::pow(h(x), 2.0 / 3.0); },
                                    rel_tol, 65);
    const double c11 = beckner_constant(1, 1.0);
    return lhs.value / (c11 * mass.value * mass.value);
}

inline CheckResult criterion_beckner() {
    return detail::timed("C12 beckner-desk-check", [](CheckResult& res) {
        const double c11 = beckner_constant(1, 1.0);
        const double ratio = beckner_desk_ratio();
        res.pass = std::fabs(ratio - 1.0) <= 1e-4 &&
                   detail::max_rel_err(c11, 2.0 / pi_v) <= 1e-12;
        res.detail = detail::fmt("C(1,1) = %.8f = 2/pi, ratio = %.8f (tol 1e-4)", c11, ratio);
    });
}

inline CheckResult criterion_reproducibility() {
    return detail::timed("C13 monte-carlo-reproducibility", [](CheckResult& res) {
        GaussianProfile g = GaussianProfile::standard(1);
        const StrichartzCase cas = StrichartzCase::theorem1(1, 4);
        MonteCarloSpec mc;
        mc.samples = 1000000;
        mc.seed = 1234;
        mc.chunk_size = 65536;
        mc.workers = 1;
        auto a = rhs_functional(ProductTransform::from_space_gaussian(g, 4), cas, mc);
        mc.workers = 3;
        auto b = rhs_functional(ProductTransform::from_space_gaussian(g, 4), cas, mc);
        const bool same_value = std::memcmp(&a.value, &b.value, sizeof(double)) == 0;
        const bool same_err =
            std::memcmp(&a.stderr_of_value, &b.stderr_of_value, sizeof(double)) == 0;
        res.pass = same_value && same_err;
        res.detail = detail::fmt("workers 1 vs 3: value %.17g, byte-identical = %.0f", a.value,
                                 same_value && same_err ? 1.0 : 0.0);
    });
}

inline std::vector<CheckResult> run_all(Profile profile, const ProgressFn& progress = {}) {
    std::vector<CheckResult> out;
    auto push = [&](CheckResult r) {
        if (progress) progress(r);
        out.push_back(std::move(r));
    };
    push(criterion_constants());
    push(criterion_theorem1_closed());
    push(criterion_theorem1_montecarlo(profile));
    push(criterion_strictness());
    push(criterion_mixed_norm());
    push(criterion_sobolev());
    push(criterion_cone_weights(profile));
    push(criterion_cone_sharp());
    push(criterion_paraboloid_sharp());
    push(criterion_identities());
    push(criterion_optimizer());
    push(criterion_beckner());
    push(criterion_reproducibility());
    return out;
}

}  // namespace strz::verify
