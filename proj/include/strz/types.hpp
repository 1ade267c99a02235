#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace strz {

using Complex = std::complex<double>;

/// Gaussian datum e^{A|x|^2 + b.x + C} with complex scalar covariance A,
/// complex shift vector b and complex amplitude exponent C. Re(A) < 0.
struct GaussianProfile {
    int n = 1;
    Complex A{-0.5, 0.0};
    std::vector<Complex> b;   // size n
    Complex C{0.0, 0.0};

    GaussianProfile() : b(1, Complex(0.0, 0.0)) {}

    GaussianProfile(int dim, Complex cov, std::vector<Complex> shift, Complex amp)
        : n(dim), A(cov), b(std::move(shift)), C(amp) {
        validate();
    }

    static GaussianProfile standard(int dim) {
        return GaussianProfile(dim, Complex(-0.5, 0.0),
                               std::vector<Complex>(dim, Complex(0.0, 0.0)),
                               Complex(0.0, 0.0));
    }

    void validate() const {
        if (n < 1) throw std::invalid_argument("GaussianProfile: n must be >= 1");
        if (!(A.real() < 0.0))
            throw std::invalid_argument("GaussianProfile: Re(A) must be negative");
        if (static_cast<int>(b.size()) != n)
            throw std::invalid_argument("GaussianProfile: b must have n components");
    }
};

/// Uniformly sampled complex function on the centered box [-L, L]^n.
/// samples are row-major with axis 0 slowest; x_i = (i - N/2) * (2L/N).
struct GridFunction {
    int n = 1;
    double half_width = 1.0;   // L
    int points_per_axis = 2;   // N, even
    std::vector<Complex> samples;

    GridFunction() = default;

    GridFunction(int dim, double L, int N)
        : n(dim), half_width(L), points_per_axis(N) {
        validate_shape();
        samples.assign(total_points(), Complex(0.0, 0.0));
    }

    void validate_shape() const {
        if (n < 1 || n > 4) throw std::invalid_argument("GridFunction: n out of range [1,4]");
        if (half_width <= 0.0) throw std::invalid_argument("GridFunction: L must be positive");
        if (points_per_axis < 2 || points_per_axis % 2 != 0)
            throw std::invalid_argument("GridFunction: N must be a positive even integer");
        double total = std::pow(static_cast<double>(points_per_axis), n);
        if (total > (1u << 27))
            throw std::invalid_argument("GridFunction: grid too large");
    }

    std::size_t total_points() const {
        std::size_t t = 1;
        for (int a = 0; a < n; ++a) t *= static_cast<std::size_t>(points_per_axis);
        return t;
    }

    double space_step() const { return 2.0 * half_width / points_per_axis; }

    /// Coordinate of index i along one axis.
    double coord(int i) const { return (i - points_per_axis / 2) * space_step(); }

    /// Measure weight of one cell.
    double cell_measure() const {
        double m = 1.0;
        for (int a = 0; a < n; ++a) m *= space_step();
        return m;
    }
};

/// Symbolic-infinity-aware exponent for admissibility checks.
struct Exponent {
    double value = 2.0;
    bool infinite = false;

    Exponent() = default;
    Exponent(double v) : value(v) {}
    static Exponent inf() {
        Exponent e;
        e.infinite = true;
        e.value = std::numeric_limits<double>::infinity();
        return e;
    }
    double reciprocal() const { return infinite ? 0.0 : 1.0 / value; }
    bool at_least_two() const { return infinite || value >= 2.0; }
};

/// A validated Strichartz exponent configuration: either a Theorem-1 power
/// case (q = r = 2k) or an explicit (q, r) pair.
struct StrichartzCase {
    int n = 1;
    int k = 0;          // 0 when constructed from explicit exponents
    double q = 6.0;
    double r = 6.0;

    static StrichartzCase theorem1(int n, int k) {
        if (k < 2) throw std::domain_error("StrichartzCase: requires k >= 2");
        if (n < 1) throw std::domain_error("StrichartzCase: requires n >= 1");
        if (n == 1 && k == 2)
            throw std::domain_error("StrichartzCase: the case (n,k) = (1,2) is excluded");
        StrichartzCase c;
        c.n = n;
        c.k = k;
        c.q = c.r = 2.0 * k;
        return c;
    }

    static StrichartzCase mixed(int n, double q, double r) {
        if (n < 1) throw std::domain_error("StrichartzCase: requires n >= 1");
        if (q < 2.0 || r < 2.0)
            throw std::domain_error("StrichartzCase: exponents must be >= 2");
        StrichartzCase c;
        c.n = n;
        c.q = q;
        c.r = r;
        c.k = 0;
        return c;
    }

    /// (n(k-1) - 2)/2, the weight power of the kernel in the main functional.
    double kernel_power() const {
        if (k < 2) throw std::logic_error("kernel_power: not a Theorem-1 case");
        return (n * (k - 1) - 2) / 2.0;
    }
};

/// Sample budget and deterministic substream policy for Monte Carlo
/// integrals. The estimate depends only on (seed, samples, chunk_size).
struct MonteCarloSpec {
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 1;
    std::uint64_t chunk_size = 65536;
    int workers = 1;

    void validate() const {
        if (samples == 0) throw std::invalid_argument("MonteCarloSpec: samples must be positive");
        if (chunk_size == 0) throw std::invalid_argument("MonteCarloSpec: chunk_size must be positive");
        if (workers < 1) throw std::invalid_argument("MonteCarloSpec: workers must be >= 1");
    }
};

enum class Verdict { pass, fail, indeterminate };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "indeterminate";
    }
}

/// Two sides of an inequality plus their error estimates and a verdict.
struct RatioReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double lhs_err = 0.0;
    double rhs_err = 0.0;
    double expected = 1.0;
    double tolerance = 0.0;
    Verdict verdict = Verdict::indeterminate;

    /// Combined relative-error propagation onto the ratio.
    double ratio_err() const {
        double rel = 0.0;
        if (lhs > 0.0) rel += lhs_err / lhs;
        if (rhs > 0.0) rel += rhs_err / rhs;
        return std::fabs(ratio) * rel;
    }
};

/// Equality verdict: pass when |ratio - expected| <= tolerance, fail when the
/// deviation exceeds tolerance by more than three combined errors.
inline Verdict equality_verdict(const RatioReport& rep) {
    const double dev = std::fabs(rep.ratio - rep.expected);
    if (dev <= rep.tolerance) return Verdict::pass;
    if (dev <= rep.tolerance + 3.0 * rep.ratio_err()) return Verdict::indeterminate;
    return Verdict::fail;
}

/// Strictness verdict: pass when ratio < 1 - 3 * combined error.
inline Verdict strictness_verdict(const RatioReport& rep) {
    if (rep.ratio < 1.0 - 3.0 * rep.ratio_err()) return Verdict::pass;
    if (rep.ratio < 1.0) return Verdict::indeterminate;
    return Verdict::fail;
}

inline RatioReport make_ratio_report(double lhs, double rhs, double lhs_err,
                                     double rhs_err, double expected,
                                     double tolerance) {
    RatioReport rep;
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.lhs_err = lhs_err;
    rep.rhs_err = rhs_err;
    rep.expected = expected;
    rep.tolerance = tolerance;
    if (!(rhs > 0.0)) {
        rep.ratio = std::numeric_limits<double>::quiet_NaN();
        rep.verdict = Verdict::indeterminate;
        return rep;
    }
    rep.ratio = lhs / rhs;
    rep.verdict = equality_verdict(rep);
    return rep;
}

} // namespace strz
