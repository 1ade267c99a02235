#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace strz {

/// Gauss-Legendre rule on [-1, 1]; nodes/weights cached per order.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendre& get(int n) {
        static std::map<int, GaussLegendre> cache;
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
        GaussLegendre rule;
        rule.nodes.resize(n);
        rule.weights.resize(n);
        const double pi = 3.14159265358979323846;
        for (int i = 0; i < n; ++i) {
            double t = std::cos(pi * (i + 0.75) / (n + 0.5));
            double p1 = 0.0, dp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                p1 = t;
                for (int j = 2; j <= n; ++j) {
                    double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                double dt = -p1 / dp;
                t += dt;
                if (std::fabs(dt) < 1e-15) break;
            }
            rule.nodes[i] = t;
            rule.weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
        return cache.emplace(n, std::move(rule)).first->second;
    }
};

/// Fixed-order Gauss-Legendre integral of f over [a, b].
template <typename F>
double gl_integrate(F&& f, double a, double b, int order) {
    const auto& rule = GaussLegendre::get(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // estimate, from the last refinement delta
    bool converged = false;
};

/// Node-doubling Gauss-Legendre on [a, b] until the relative change between
/// successive orders drops below rel_tol.
template <typename F>
QuadResult gl_adaptive(F&& f, double a, double b, double rel_tol,
                       int order0 = 33, int max_order = 8193) {
    QuadResult res;
    double prev = gl_integrate(f, a, b, order0);
    for (int order = 2 * order0 - 1; order <= max_order; order = 2 * order - 1) {
        const double cur = gl_integrate(f, a, b, order);
        const double delta = std::fabs(cur - prev);
        res.value = cur;
        res.error = delta;
        const double scale = std::max(std::fabs(cur), 1e-300);
        if (delta <= rel_tol * scale) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

/// Integral of f over the whole real line via t = tan(theta). The transformed
/// integrand f(tan th) sec^2 th must extend continuously to the endpoints,
/// which holds whenever f decays at least like t^-2.
template <typename F>
QuadResult integrate_real_line(F&& f, double rel_tol, int order0 = 65,
                               int max_order = 8193) {
    const double half_pi = 1.57079632679489661923;
    auto g = [&](double th) {
        const double c = std::cos(th);
        if (std::fabs(c) < 1e-14) return 0.0;
        const double t = std::tan(th);
        return f(t) / (c * c);
    };
    return gl_adaptive(g, -half_pi, half_pi, rel_tol, order0, max_order);
}

/// Integral of f over [0, inf) via t = tan(theta), same decay requirement.
template <typename F>
QuadResult integrate_half_line(F&& f, double rel_tol, int order0 = 65,
                               int max_order = 8193) {
    const double half_pi = 1.57079632679489661923;
    auto g = [&](double th) {
        const double c = std::cos(th);
        if (std::fabs(c) < 1e-14) return 0.0;
        const double t = std::tan(th);
        return f(t) / (c * c);
    };
    return gl_adaptive(g, 0.0, half_pi, rel_tol, order0, max_order);
}

/// Periodic trapezoid on [0, 2 pi), doubling until converged. Spectrally
/// accurate for smooth periodic integrands.
template <typename F>
QuadResult trapezoid_periodic(F&& f, double rel_tol, int m0 = 16,
                              int max_m = 1 << 16) {
    const double two_pi = 6.28318530717958647692;
    QuadResult res;
    int m = m0;
    double prev = 0.0;
    for (int i = 0; i < m; ++i) prev += f(two_pi * i / m);
    prev *= two_pi / m;
    while (m < max_m) {
        m *= 2;
        double sum = 0.0;
        for (int i = 0; i < m; ++i) sum += f(two_pi * i / m);
        const double cur = sum * two_pi / m;
        const double delta = std::fabs(cur - prev);
        res.value = cur;
        res.error = delta;
        if (delta <= rel_tol * std::max(std::fabs(cur), 1e-300)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    return res;
}

/// Integral of f over [0, R] when f has an inverse-square-root singularity at
/// the right endpoint: rho = R sin^2(s) clusters nodes there and removes it.
template <typename F>
QuadResult sqrt_endpoint_integrate(F&& f, double R, double rel_tol,
                                   int order0 = 33, int max_order = 4097) {
    const double half_pi = 1.57079632679489661923;
    auto g = [&](double s) {
        const double sn = std::sin(s), cs = std::cos(s);
        const double rho = R * sn * sn;
        return f(rho) * 2.0 * R * sn * cs;
    };
    return gl_adaptive(g, 0.0, half_pi, rel_tol, order0, max_order);
}

} // namespace strz
