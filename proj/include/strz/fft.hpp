#pragma once

#include <cmath>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

#include "strz/constants.hpp"
#include "strz/types.hpp"

namespace strz {

namespace detail {

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// In-place radix-2 DFT, sign = -1 forward (e^{-2 pi i jk/N}), +1 inverse
/// kernel without the 1/N factor. Twiddles cached per (N, sign).
inline void fft_pow2(Complex* data, int n, int sign) {
    // bit reversal
    for (int i = 1, j = 0; i < n; ++i) {
        int bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(data[i], data[j]);
    }
    static std::map<std::pair<int, int>, std::vector<Complex>> twiddle_cache;
    auto key = std::make_pair(n, sign);
    auto it = twiddle_cache.find(key);
    if (it == twiddle_cache.end()) {
        std::vector<Complex> tw(n / 2);
        const double ang0 = sign * 2.0 * 3.14159265358979323846 / n;
        for (int i = 0; i < n / 2; ++i)
            tw[i] = Complex(std::cos(ang0 * i), std::sin(ang0 * i));
        it = twiddle_cache.emplace(key, std::move(tw)).first;
    }
    const auto& tw = it->second;
    for (int len = 2; len <= n; len <<= 1) {
        const int step = n / len;
        for (int i = 0; i < n; i += len) {
            for (int j = 0; j < len / 2; ++j) {
                const Complex w = tw[j * step];
                const Complex u = data[i + j];
                const Complex v = data[i + j + len / 2] * w;
                data[i + j] = u + v;
                data[i + j + len / 2] = u - v;
            }
        }
    }
}

} // namespace detail

/// Discrete approximation of f^(w) = (2 pi)^{-n/2} Int e^{-i w.x} f(x) dx on
/// the centered grid. Output lives on the dual grid with frequency step
/// pi / L (dual half-width pi N / (2L)). Index m carries frequency
/// (m - N/2) pi / L. Requires N to be a power of two.
///
/// Derivation of the index bookkeeping: with x_j = (j - N/2) h and
/// w_m = (m - N/2) dw, dw h = 2 pi / N, the phase splits as
/// e^{-2 pi i m' j'/N} = e^{i pi m'} e^{-2 pi i m' j / N} with m' = m - N/2,
/// so one plain DFT plus an alternating sign and an fftshift suffice.
inline GridFunction fourier_transform_centered(const GridFunction& f, int sign) {
    f.validate_shape();
    const int N = f.points_per_axis;
    if (!detail::is_pow2(N))
        throw std::invalid_argument("fourier transform: N must be a power of two");
    GridFunction out;
    out.n = f.n;
    out.points_per_axis = N;
    out.half_width = pi_v * N / (2.0 * f.half_width);
    out.samples = f.samples;

    // per-axis scale: forward h/sqrt(2 pi), inverse dw/sqrt(2 pi); by duality
    // the input grid's step is the right measure weight in both directions.
    const double measure_step = 2.0 * f.half_width / N;
    const double axis_scale = measure_step / std::sqrt(2.0 * pi_v);

    // (-1)^{m - N/2} = (-1)^m (-1)^{N/2}
    const double parity = (N / 2) % 2 == 0 ? 1.0 : -1.0;

    const std::size_t total = out.samples.size();
    std::vector<Complex> line(N);
    std::size_t stride = 1;
    for (int axis = f.n - 1; axis >= 0; --axis) {
        const std::size_t block = stride * N;
        for (std::size_t base = 0; base < total; base += block) {
            for (std::size_t off = 0; off < stride; ++off) {
                Complex* p = out.samples.data() + base + off;
                for (int j = 0; j < N; ++j) line[j] = p[j * stride];
                detail::fft_pow2(line.data(), N, sign);
                for (int m = 0; m < N; ++m) {
                    // fftshift: centered index m reads DFT bin (m - N/2) mod N
                    const int bin = (m + N / 2) % N;
                    const double sgn = ((m % 2 == 0) ? 1.0 : -1.0) * parity;
                    p[m * stride] = line[bin] * (axis_scale * sgn);
                }
            }
        }
        stride *= N;
    }
    return out;
}

inline GridFunction fourier_forward(const GridFunction& f) {
    return fourier_transform_centered(f, -1);
}

inline GridFunction fourier_inverse(const GridFunction& fhat) {
    return fourier_transform_centered(fhat, +1);
}

/// l2 norm with the grid measure.
inline double grid_l2_norm(const GridFunction& f) {
    double s = 0.0;
    for (const auto& z : f.samples) s += std::norm(z);
    return std::sqrt(s * f.cell_measure());
}

} // namespace strz
