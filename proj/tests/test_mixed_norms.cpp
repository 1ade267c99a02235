#include <doctest.h>

#include <cmath>
#include <complex>

#include "strz/mixed_norms.hpp"
#include "strz/polygauss.hpp"
#include "strz/propagator.hpp"

using namespace strz;

namespace {
constexpr double pi = 3.14159265358979323846;
}

TEST_CASE("spatial norm on grids") {
    GridFunction f = sample_gaussian(GaussianProfile::standard(1), 12.0, 512);
    CHECK(spatial_norm(f, 2.0) == doctest::Approx(std::pow(pi, 0.25)).epsilon(1e-12));
    CHECK(spatial_norm(f, 6.0) == doctest::Approx(std::pow(pi / 3.0, 1.0 / 12.0)).epsilon(1e-9));
    GridFunction zero(2, 4.0, 16);
    CHECK(spatial_norm(zero, 4.0) == 0.0);
    CHECK_THROWS_AS(spatial_norm(f, 0.5), std::domain_error);
}

TEST_CASE("polygauss moments and norms against closed forms") {
    // pure gaussian factor e^{-w^2/2}
    PolyGauss1D g;
    g.a = Complex(-0.5, 0.0);
    CHECK(l2_norm_sq(g) == doctest::Approx(std::sqrt(pi)).epsilon(1e-14));
    CHECK(abs_pow_integral(g, 6.0) == doctest::Approx(std::sqrt(pi / 3.0)).epsilon(1e-14));
    CHECK(second_moment_sq(g) == doctest::Approx(0.5 * std::sqrt(pi)).epsilon(1e-13));

    // hermite factor: f = 2 w^2 e^{-w^2/2} has ||f||_2^2 = 3 sqrt(pi)
    PolyGauss1D h;
    h.a = Complex(-0.5, 0.0);
    h.poly = Poly{Complex(0.0, 0.0), Complex(0.0, 0.0), Complex(2.0, 0.0)};
    CHECK(l2_norm_sq(h) == doctest::Approx(3.0 * std::sqrt(pi)).epsilon(1e-13));
}

TEST_CASE("evolve_factor reproduces the gaussian propagator") {
    PolyGauss1D f;
    f.a = Complex(-0.5, 0.0);  // frequency side of the standard gaussian
    PolyGauss1D u = evolve_factor(f, 1.0);
    // u(1,x) = (1+2i)^{-1/2} exp(-x^2/(2(1+2i)))
    const Complex denom(1.0, 2.0);
    for (double x : {-2.0, -0.3, 0.0, 1.1}) {
        const Complex expect = std::pow(denom, Complex(-0.5, 0.0)) * std::exp(-x * x / (2.0 * denom));
        CHECK(std::abs(u.eval(x) - expect) < 1e-13);
    }
    // mass conservation with a polynomial factor
    PolyGauss1D p;
    p.a = Complex(-0.5, 0.0);
    p.poly = Poly{Complex(1.0, 0.0), Complex(0.5, -0.2), Complex(-0.3, 0.1)};
    const double mass0 = l2_norm_sq(p);
    for (double t : {0.4, 1.7, 6.0}) {
        PolyGauss1D ut = evolve_factor(p, t);
        CHECK(l2_norm_sq(ut) == doctest::Approx(mass0).epsilon(1e-11));
    }
}

TEST_CASE("strichartz norm closed-form golden cases") {
    const GaussianProfile g1 = GaussianProfile::standard(1);
    const FreqProduct fp1 = FreqProduct::from_space_gaussian(g1);

    // n=1 (6,6): ||u||^6 = (pi/2) sqrt(pi/3)
    NormResult r66 = strichartz_norm(fp1, 6.0, 6.0);
    const double expect66 = std::pow(0.5 * pi * std::sqrt(pi / 3.0), 1.0 / 6.0);
    CHECK(r66.value == doctest::Approx(expect66).epsilon(1e-10));
    CHECK(r66.value == doctest::Approx(1.08235).epsilon(1e-4));
    // ratio to mass is the sharp constant
    CHECK(r66.value / fp1.l2_norm() ==
          doctest::Approx(std::pow(12.0, -1.0 / 12.0)).epsilon(1e-9));

    // n=1 (8,4) mixed norm: ratio 2^{-1/4}
    NormResult r84 = strichartz_norm(fp1, 8.0, 4.0);
    CHECK(r84.value / fp1.l2_norm() == doctest::Approx(std::pow(2.0, -0.25)).epsilon(1e-9));

    // oracle helper agrees for the centered family
    CHECK(std::pow(r66.value, 6.0) ==
          doctest::Approx(centered_gaussian_strichartz_pow(1, -0.5, 6.0, 6.0)).epsilon(1e-9));
    CHECK(std::pow(r84.value, 8.0) ==
          doctest::Approx(centered_gaussian_strichartz_pow(1, -0.5, 8.0, 4.0)).epsilon(1e-9));

    // reported error bounds the actual error on the calibration case
    CHECK(std::fabs(std::pow(r66.value, 6.0) - 0.5 * pi * std::sqrt(pi / 3.0)) <=
          std::max(6.0 * std::pow(r66.value, 5.0) * r66.error, 1e-12));

    CHECK_THROWS_AS(strichartz_norm(fp1, 7.0, 3.0), std::domain_error);
}

TEST_CASE("strichartz scaling and galilean invariance") {
    const double lambda = 2.0;
    // f_lambda(x) = f(lambda x): A -> lambda^2 A
    GaussianProfile base = GaussianProfile::standard(1);
    GaussianProfile scaled(1, base.A * lambda * lambda, base.b, base.C);
    const double q = 6.0, r = 6.0;
    NormResult nb = strichartz_norm(base, q, r);
    NormResult ns = strichartz_norm(scaled, q, r);
    const double predicted = std::pow(lambda, -1.0 / r - 2.0 / q) * nb.value;
    CHECK(ns.value == doctest::Approx(predicted).epsilon(1e-9));
    const double lam_half = 0.5;
    GaussianProfile scaled2(1, base.A * lam_half * lam_half, base.b, base.C);
    CHECK(strichartz_norm(scaled2, q, r).value ==
          doctest::Approx(std::pow(lam_half, -1.0 / r - 2.0 / q) * nb.value).epsilon(1e-9));

    // e^{ivx} f: b gains iv; the ratio to mass is unchanged
    GaussianProfile boosted = base;
    boosted.b[0] = Complex(0.0, 1.3);
    const FreqProduct fb = FreqProduct::from_space_gaussian(boosted);
    NormResult nboost = strichartz_norm(fb, q, r);
    CHECK(nboost.value / fb.l2_norm() ==
          doctest::Approx(nb.value / gaussian_l2_norm(base)).epsilon(1e-8));
}

TEST_CASE("grid path agrees with the closed-form path") {
    GaussianProfile g = GaussianProfile::standard(1);
    GridFunction f = sample_gaussian(g, 14.0, 1024);
    GridStrichartzOptions opt;
    opt.rel_tol = 1e-8;
    NormResult grid = strichartz_norm(f, 6.0, 6.0, opt);
    NormResult exact = strichartz_norm(g, 6.0, 6.0);
    CHECK(grid.reliable);
    CHECK(grid.value == doctest::Approx(exact.value).epsilon(1e-6));

    // 2-d calibration
    GaussianProfile g2 = GaussianProfile::standard(2);
    GridFunction f2 = sample_gaussian(g2, 12.0, 256);
    GridStrichartzOptions opt2;
    opt2.rel_tol = 1e-7;
    opt2.max_nodes = 513;
    NormResult grid2 = strichartz_norm(f2, 4.0, 4.0, opt2);
    NormResult exact2 = strichartz_norm(g2, 4.0, 4.0);
    CHECK(grid2.value == doctest::Approx(exact2.value).epsilon(1e-6));
}

TEST_CASE("chirp far-time path matches the multiplier path") {
    GaussianProfile g = GaussianProfile::standard(1);
    GridFunction f = sample_gaussian(g, 14.0, 1024);
    for (double t : {0.3, 0.45}) {
        GridFunction u = evolve_grid(f, t);
        double direct = 0.0;
        for (const auto& z : u.samples) direct += std::pow(std::abs(z), 6.0);
        direct *= u.cell_measure();
        const double chirp = grid_spatial_norm_pow_chirp(f, t, 6.0);
        CHECK(chirp == doctest::Approx(direct).epsilon(1e-9));
    }
    // far time against the closed form
    EvolvedGaussian ev = evolve_gaussian(g, 5.0);
    const double closed = gaussian_lr_norm_pow(ev.at_t, 6.0);
    CHECK(grid_spatial_norm_pow_chirp(f, 5.0, 6.0) == doctest::Approx(closed).epsilon(1e-9));
}

TEST_CASE("first moment cross term") {
    // radial 2-d gaussian: zero
    GridFunction radial = sample_gaussian(GaussianProfile::standard(2), 10.0, 128);
    CHECK(first_moment_cross_term(radial) <= 1e-12);

    // shifted gaussian e^{-(x-1)^2}: first moment sqrt(pi), squared = pi
    GaussianProfile shifted(1, Complex(-1.0, 0.0), {Complex(2.0, 0.0)}, Complex(-1.0, 0.0));
    GridFunction gs = sample_gaussian(shifted, 14.0, 512);
    CHECK(first_moment_cross_term(gs) == doctest::Approx(pi).epsilon(1e-8));

    // vanishing first moment: any even g, here a non-gaussian one
    GridFunction even(1, 10.0, 256);
    for (int j = 0; j < 256; ++j) {
        const double x = even.coord(j);
        even.samples[j] = x * x * std::exp(-x * x);
    }
    CHECK(first_moment_cross_term(even) <= 1e-20);

    GridFunction complex_in(1, 4.0, 16);
    complex_in.samples[3] = Complex(0.0, 1.0);
    CHECK_THROWS_AS(first_moment_cross_term(complex_in), std::invalid_argument);
}

TEST_CASE("time quadrature error estimate is conservative") {
    const GaussianProfile g1 = GaussianProfile::standard(1);
    for (auto qr : {std::pair<double, double>{6.0, 6.0}, {8.0, 4.0}, {10.0, 10.0}}) {
        NormResult nr = strichartz_norm(g1, qr.first, qr.second);
        const double truth =
            std::pow(centered_gaussian_strichartz_pow(1, -0.5, qr.first, qr.second),
                     1.0 / qr.first);
        CHECK(std::fabs(nr.value - truth) <= std::max(nr.error, 1e-13));
    }
}
