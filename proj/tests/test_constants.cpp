#include <doctest.h>

#include <cmath>
#include <random>

#include "strz/constants.hpp"
#include "strz/special_functions.hpp"

using namespace strz;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("gamma function against exact values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
    CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * std::sqrt(pi)).epsilon(1e-14));
    double fact = 1.0;
    for (int n = 2; n <= 20; ++n) {
        fact *= n - 1;
        CHECK(gamma_fn(static_cast<double>(n)) == doctest::Approx(fact).epsilon(1e-13));
    }
    // duplication identity Gamma(2z) = 2^{2z-1}/sqrt(pi) Gamma(z) Gamma(z+1/2)
    for (double z : {0.3, 0.75, 1.2, 2.9, 5.5, 11.25}) {
        const double lhs = gamma_fn(2.0 * z);
        const double rhs =
            std::pow(2.0, 2.0 * z - 1.0) / std::sqrt(pi) * gamma_fn(z) * gamma_fn(z + 0.5);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
    }
    CHECK(std::exp(log_gamma(30.0)) == doctest::Approx(gamma_fn(30.0)).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_fn(-3.0), std::domain_error);
}

TEST_CASE("dawson integral") {
    // series / quadrature / asymptotic branches against the ODE F' = 1 - 2xF
    // integrated at high resolution
    auto dawson_ode = [](double x) {
        double f = 0.0;
        const int steps = 400000;
        const double h = x / steps;
        double t = 0.0;
        for (int i = 0; i < steps; ++i) {
            // RK4 on F' = 1 - 2 t F
            auto rhs = [](double tt, double ff) { return 1.0 - 2.0 * tt * ff; };
            const double k1 = rhs(t, f);
            const double k2 = rhs(t + 0.5 * h, f + 0.5 * h * k1);
            const double k3 = rhs(t + 0.5 * h, f + 0.5 * h * k2);
            const double k4 = rhs(t + h, f + h * k3);
            f += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            t += h;
        }
        return f;
    };
    for (double x : {0.3, 0.9, 1.7, 4.0, 6.5, 8.5}) {
        CHECK(dawson(x) == doctest::Approx(dawson_ode(x)).epsilon(1e-9));
        CHECK(dawson(-x) == doctest::Approx(-dawson(x)).epsilon(1e-15));
    }
    CHECK(dawson(0.0) == 0.0);
}

TEST_CASE("sharp constant golden values") {
    CHECK(sharp_constant(1, 3) == doctest::Approx(std::pow(12.0, -0.5)).epsilon(1e-13));
    CHECK(sharp_constant(2, 2) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(sharp_constant(1, 4) == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-13));
    CHECK_THROWS_AS(sharp_constant(1, 2), std::domain_error);
    CHECK_THROWS_AS(sharp_constant(1, 1), std::domain_error);
    CHECK_THROWS_AS(sharp_constant(0, 3), std::domain_error);
}

TEST_CASE("corollary constant table") {
    CHECK(corollary_constant("n1_q6_r6") == doctest::Approx(std::pow(12.0, -1.0 / 12.0)).epsilon(1e-14));
    CHECK(corollary_constant("parab_n2_q4") == doctest::Approx(std::pow(4.0 * pi, -0.5)).epsilon(1e-14));
    CHECK(corollary_constant("cone_n3_q4") == doctest::Approx(std::pow(2.0 * pi, 0.25)).epsilon(1e-14));
    CHECK(corollary_constant("n2_q4_r4") == doctest::Approx(std::pow(2.0, -0.5)).epsilon(1e-14));
    CHECK(corollary_cases().size() == 13);
    CHECK_THROWS_AS(corollary_constant("nope"), std::invalid_argument);
    // consistency with the Theorem-1 constants
    CHECK(std::pow(sharp_constant(1, 3), 1.0 / 6.0) ==
          doctest::Approx(corollary_constant("n1_q6_r6")).epsilon(1e-12));
    CHECK(std::pow(sharp_constant(2, 2), 1.0 / 4.0) ==
          doctest::Approx(corollary_constant("n2_q4_r4")).epsilon(1e-12));
}

TEST_CASE("beckner constant") {
    CHECK(beckner_constant(1, 1.0) == doctest::Approx(2.0 / pi).epsilon(1e-13));
    CHECK(beckner_constant(2, 2.0) == doctest::Approx(pi / 2.0).epsilon(1e-13));
    CHECK(beckner_constant(1, 1e-9) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_THROWS_AS(beckner_constant(1, 0.0), std::domain_error);
    CHECK_THROWS_AS(beckner_constant(1, -1.0), std::domain_error);
    // positive and continuous on a lattice
    for (int n = 1; n <= 4; ++n) {
        double prev = beckner_constant(n, 0.05);
        for (double lam = 0.1; lam <= 4.0; lam += 0.05) {
            const double cur = beckner_constant(n, lam);
            CHECK(cur > 0.0);
            CHECK(std::fabs(cur - prev) < 0.6 * std::max(1.0, prev));
            prev = cur;
        }
    }
}

TEST_CASE("weak exponents") {
    auto pr = weak_exponents(1, 3);
    CHECK(pr.first == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(pr.second == doctest::Approx(2.0).epsilon(1e-15));
    pr = weak_exponents(2, 2);
    CHECK(pr.first == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(pr.second == doctest::Approx(2.0).epsilon(1e-15));
    pr = weak_exponents(1, 4);
    CHECK(pr.first == doctest::Approx(8.0 / 5.0).epsilon(1e-15));
    CHECK(pr.second == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK_THROWS_AS(weak_exponents(1, 2), std::domain_error);
}

TEST_CASE("admissibility predicate") {
    CHECK(admissible(6.0, 6.0, 1));
    CHECK(admissible(8.0, 4.0, 1));
    CHECK(admissible(4.0, 4.0, 2));
    CHECK(!admissible(Exponent(2.0), Exponent::inf(), 2));
    CHECK(admissible(Exponent(2.0), Exponent::inf(), 1) == false);  // 1 != 1/2
    CHECK(admissible(Exponent::inf(), Exponent(2.0), 3));
    CHECK(!admissible(8.0, 8.0, 1));
    CHECK(!admissible(1.5, 6.0, 1));
}

TEST_CASE("kernel forms agree and obey symmetry") {
    // spec'd examples
    std::vector<std::vector<double>> ones(3, std::vector<double>(2, 1.0));
    CHECK(kernel_K(ones) == doctest::Approx(0.0));
    std::vector<std::vector<double>> pm{{1.0}, {-1.0}};
    CHECK(kernel_K(pm) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(kernel_K_centered(pm) == doctest::Approx(2.0).epsilon(1e-15));
    std::vector<std::vector<double>> same{{0.3, -0.4}, {0.3, -0.4}};
    CHECK(kernel_K_centered(same) == doctest::Approx(0.0));

    std::mt19937_64 gen(42);
    std::normal_distribution<double> dist(0.0, 2.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const int k = 2 + static_cast<int>(gen() % 5);
        const int n = 1 + static_cast<int>(gen() % 3);
        std::vector<std::vector<double>> eta(k, std::vector<double>(n));
        for (auto& v : eta)
            for (auto& x : v) x = dist(gen);
        const double a = kernel_K(eta);
        const double b = kernel_K_centered(eta);
        CHECK(std::fabs(a - b) <= 1e-12);
        CHECK(a >= -1e-12);

        // translation invariance
        std::vector<double> shift(n);
        for (auto& s : shift) s = dist(gen);
        auto eta_shift = eta;
        for (auto& v : eta_shift)
            for (int j = 0; j < n; ++j) v[j] += shift[j];
        CHECK(kernel_K(eta_shift) == doctest::Approx(a).epsilon(1e-11));

        // quadratic scaling
        auto eta_scaled = eta;
        for (auto& v : eta_scaled)
            for (auto& x : v) x *= 1.7;
        CHECK(kernel_K(eta_scaled) == doctest::Approx(1.7 * 1.7 * a).epsilon(1e-12));

        // flat layout agrees
        std::vector<double> flat;
        for (const auto& v : eta) flat.insert(flat.end(), v.begin(), v.end());
        CHECK(kernel_K_flat(flat.data(), k, n) == doctest::Approx(b).epsilon(1e-13));
    }
    std::vector<std::vector<double>> bad{{1.0, 2.0}, {1.0}};
    CHECK_THROWS_AS(kernel_K(bad), std::invalid_argument);
    CHECK_THROWS_AS(kernel_K_centered(bad), std::invalid_argument);
}

TEST_CASE("normalization residual vanishes on the lattice") {
    for (int n = 1; n <= 4; ++n)
        for (int k = 2; k <= 6; ++k) {
            if (n == 1 && k == 2) continue;
            CHECK(normalization_residual(n, k) <= 1e-12);
        }
    CHECK_THROWS_AS(normalization_residual(1, 2), std::domain_error);
}
