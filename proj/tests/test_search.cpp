#include <doctest.h>

#include <cmath>

#include "strz/search.hpp"

using namespace strz;

TEST_CASE("ratio objective at the gaussian family is 1") {
    TrialFunction pure(GaussianProfile::standard(1));
    CHECK(std::fabs(ratio_objective(pure, "theorem1_n1_k3") - 1.0) < 1e-8);
    CHECK(std::fabs(ratio_objective(pure, "n1_q6_r6") - 1.0) < 1e-8);

    // boosted base (imaginary b) stays inside the family
    TrialFunction boosted(GaussianProfile::standard(1));
    boosted.base.b[0] = Complex(0.0, 1.1);
    CHECK(std::fabs(ratio_objective(boosted, "theorem1_n1_k3") - 1.0) < 1e-8);

    // perturbed trial sits strictly below
    TrialFunction bent(GaussianProfile::standard(1), {Complex(0.0, 0.0), Complex(0.5, 0.0)});
    CHECK(ratio_objective(bent, "theorem1_n1_k3") < 1.0);

    CHECK_THROWS_AS(ratio_objective(pure, "bogus_id"), std::invalid_argument);
}

TEST_CASE("optimizer recovers the gaussian from a perturbed start") {
    TrialFunction init(GaussianProfile::standard(1), {Complex(0.0, 0.0), Complex(0.3, 0.0)});
    OptimizeResult res = optimize("theorem1_n1_k3", init, 500);
    CHECK(res.best_ratio >= 0.999);
    CHECK(res.best.coeff_norm() <= 0.02);
    CHECK(res.evaluations <= 500);
    // monotone best-so-far trace
    for (std::size_t i = 1; i < res.trace.size(); ++i)
        CHECK(res.trace[i].second >= res.trace[i - 1].second);
}

TEST_CASE("optimizer at the optimum and contract edges") {
    TrialFunction pure(GaussianProfile::standard(1));
    OptimizeResult res = optimize("theorem1_n1_k3", pure, 200);
    CHECK(res.best_ratio >= 1.0 - 1e-7);

    OptimizeResult one = optimize("theorem1_n1_k3", pure, 1);
    CHECK(one.budget_exhausted);
    CHECK(one.evaluations <= 1);

    TrialFunction bad = pure;
    bad.base = GaussianProfile::standard(1);
    bad.base.A = Complex(0.5, 0.0);  // invalid
    CHECK_THROWS_AS(optimize("theorem1_n1_k3", bad, 10), std::invalid_argument);
}

TEST_CASE("optimizer is deterministic") {
    TrialFunction init(GaussianProfile::standard(1), {Complex(0.1, 0.0), Complex(0.2, 0.0)});
    OptimizeResult a = optimize("theorem1_n1_k3", init, 120);
    OptimizeResult b = optimize("theorem1_n1_k3", init, 120);
    CHECK(a.best_ratio == b.best_ratio);
    CHECK(a.evaluations == b.evaluations);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
        CHECK(a.trace[i].first == b.trace[i].first);
        CHECK(a.trace[i].second == b.trace[i].second);
    }
}

TEST_CASE("perturbation scan shapes") {
    const std::vector<double> eps{-0.4, -0.2, 0.0, 0.2, 0.4};
    auto scan = perturbation_scan("theorem1_n1_k3", "h4", eps);
    REQUIRE(scan.size() == 5);
    // ratio(0) = 1
    CHECK(std::fabs(scan[2].second - 1.0) < 1e-8);
    // strict ordering away from the maximizer and bound below 1
    CHECK(scan[0].second < scan[1].second);
    CHECK(scan[1].second < 1.0);
    CHECK(scan[4].second < scan[3].second);
    CHECK(scan[3].second < 1.0);
    // concavity of the centered second difference at 0
    const double second_diff = scan[1].second - 2.0 * scan[2].second + scan[3].second;
    CHECK(second_diff <= 0.0);

    // gaussian-family directions scan flat
    for (const char* dir : {"modulation", "scaling", "translation", "zero"}) {
        auto flat = perturbation_scan("theorem1_n1_k3", dir, eps);
        for (const auto& [e, ratio] : flat) CHECK(std::fabs(ratio - 1.0) < 1e-7);
    }

    CHECK_THROWS_AS(perturbation_scan("theorem1_n1_k3", "spin", eps), std::invalid_argument);
}

TEST_CASE("scan stays below one plus error on the (2,2) functional") {
    const std::vector<double> eps{-0.3, 0.0, 0.3};
    auto scan = perturbation_scan("theorem1_n2_k2", "h2", eps);
    for (const auto& [e, ratio] : scan) CHECK(ratio <= 1.0 + 1e-8);
    CHECK(std::fabs(scan[1].second - 1.0) < 1e-8);
    CHECK(scan[0].second < 1.0);
    CHECK(scan[2].second < 1.0);
}
