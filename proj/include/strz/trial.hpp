#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "strz/polygauss.hpp"
#include "strz/types.hpp"

namespace strz {

/// Trial family for maximizer searches: a frequency-side Gaussian base
/// multiplied by 1 + sum_m c_m H_m along the first axis,
///   f^(w) = (1 + sum c_m H_m(w_1)) e^{A|w|^2 + b.w + C},
/// normalized to ||f^||_2 = 1. All-zero coefficients reproduce the pure
/// Gaussian; evaluation stays in the exact polynomial-Gaussian algebra.
struct TrialFunction {
    GaussianProfile base;                 // frequency side
    std::vector<Complex> hermite_coeffs;  // c_1 .. c_m

    TrialFunction() : base(GaussianProfile::standard(1)) {}

    explicit TrialFunction(GaussianProfile freq_base, std::vector<Complex> coeffs = {})
        : base(std::move(freq_base)), hermite_coeffs(std::move(coeffs)) {
        base.validate();
    }

    bool is_pure_gaussian() const {
        for (const auto& c : hermite_coeffs)
            if (std::abs(c) != 0.0) return false;
        return true;
    }

    double coeff_norm() const {
        double s = 0.0;
        for (const auto& c : hermite_coeffs) s += std::norm(c);
        return std::sqrt(s);
    }

    /// Exact frequency-side factorization; normalized to unit L^2 norm by a
    /// scale projected into the first factor's amplitude.
    FreqProduct to_freq_product(bool normalized = true) const {
        FreqProduct fp = FreqProduct::from_freq_gaussian(base);
        Poly p{Complex(1.0, 0.0)};
        for (std::size_t m = 0; m < hermite_coeffs.size(); ++m) {
            if (std::abs(hermite_coeffs[m]) == 0.0) continue;
            const Poly h = hermite_poly(static_cast<int>(m) + 1);
            if (p.size() < h.size()) p.resize(h.size(), Complex(0.0, 0.0));
            for (std::size_t i = 0; i < h.size(); ++i) p[i] += hermite_coeffs[m] * h[i];
        }
        fp.factors[0].poly = std::move(p);
        if (normalized) {
            const double nrm2 = fp.l2_norm_squared();
            if (!(nrm2 > 0.0) || !std::isfinite(nrm2))
                throw std::domain_error("TrialFunction: degenerate normalization");
            fp.factors[0].d -= 0.5 * std::log(nrm2);
        }
        return fp;
    }
};

} // namespace strz
