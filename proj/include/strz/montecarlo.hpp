#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "strz/types.hpp"

// Deterministic chunked Monte Carlo. Every chunk owns a substream seeded by
// (seed, chunk index) and consumes a fixed number of draws per sample, and
// partial sums are reduced in chunk order, so the estimate is a pure function
// of (seed, samples, chunk_size) no matter how many workers run the chunks.

namespace strz {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// xoshiro256++ with splitmix-expanded seeding.
struct Rng {
    std::uint64_t s[4];

    explicit Rng(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& si : s) si = splitmix64(sm);
    }

    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
        const std::uint64_t t = s[1] << 17;
        s[2] ^= s[0];
        s[3] ^= s[1];
        s[1] ^= s[2];
        s[0] ^= s[3];
        s[2] ^= t;
        s[3] = rotl(s[3], 45);
        return result;
    }

    /// Uniform in (0, 1].
    double next_uniform() {
        return 1.0 - (next_u64() >> 11) * 0x1.0p-53;
    }

    /// One standard normal per call (Box-Muller cosine branch; fixed draw
    /// count of two uniforms keeps substreams aligned).
    double next_normal() {
        const double u1 = next_uniform();
        const double u2 = next_uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * pi_v_mc * u2);
    }

    static constexpr double pi_v_mc = 3.14159265358979323846;
};

inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
    std::uint64_t st = seed ^ (0xD1B54A32D192ED03ULL * (chunk + 1));
    return splitmix64(st);
}

struct MeanEstimate {
    double mean = 0.0;
    double stderr_of_mean = 0.0;
    std::uint64_t samples = 0;
};

/// Mean and standard error of sample_fn over mc.samples draws. sample_fn
/// receives a per-chunk Rng and must consume a fixed number of draws.
inline MeanEstimate chunked_mean(const MonteCarloSpec& mc,
                                 const std::function<double(Rng&)>& sample_fn) {
    mc.validate();
    const std::uint64_t n_chunks = (mc.samples + mc.chunk_size - 1) / mc.chunk_size;
    std::vector<double> sums(n_chunks, 0.0), sumsqs(n_chunks, 0.0);

    auto run_chunk = [&](std::uint64_t c) {
        const std::uint64_t lo = c * mc.chunk_size;
        const std::uint64_t hi = std::min(lo + mc.chunk_size, mc.samples);
        Rng rng(chunk_seed(mc.seed, c));
        double s = 0.0, s2 = 0.0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            const double v = sample_fn(rng);
            s += v;
            s2 += v * v;
        }
        sums[c] = s;
        sumsqs[c] = s2;
    };

    const int workers = std::max(1, mc.workers);
    if (workers == 1 || n_chunks == 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) run_chunk(c);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w]() {
                for (std::uint64_t c = w; c < n_chunks; c += workers) run_chunk(c);
            });
        }
        for (auto& th : pool) th.join();
    }

    // reduce in chunk order
    double total = 0.0, total_sq = 0.0;
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
        total += sums[c];
        total_sq += sumsqs[c];
    }
    MeanEstimate est;
    est.samples = mc.samples;
    const double n = static_cast<double>(mc.samples);
    est.mean = total / n;
    const double var = std::max(0.0, total_sq / n - est.mean * est.mean);
    est.stderr_of_mean = std::sqrt(var / n);
    return est;
}

} // namespace strz
