#pragma once

#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "strz/types.hpp"

// Binary grid files: a 32-byte header {magic "STRZGRID", u32 n, u32 N,
// f64 L, 8 reserved zero bytes} followed by N^n little-endian float64
// (re, im) pairs in row-major axis order.

namespace strz {

namespace detail {

inline void put_u32_le(char* p, std::uint32_t v) {
    p[0] = static_cast<char>(v & 0xFF);
    p[1] = static_cast<char>((v >> 8) & 0xFF);
    p[2] = static_cast<char>((v >> 16) & 0xFF);
    p[3] = static_cast<char>((v >> 24) & 0xFF);
}

inline std::uint32_t get_u32_le(const char* p) {
    return static_cast<std::uint32_t>(static_cast<unsigned char>(p[0])) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(p[1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(p[2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<unsigned char>(p[3])) << 24);
}

inline void put_f64_le(char* p, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    for (int i = 0; i < 8; ++i) p[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
}

inline double get_f64_le(const char* p) {
    std::uint64_t bits = 0;
    for (int i = 0; i < 8; ++i)
        bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(p[i])) << (8 * i);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

} // namespace detail

inline constexpr char grid_magic[8] = {'S', 'T', 'R', 'Z', 'G', 'R', 'I', 'D'};

inline void write_grid(const GridFunction& f, const std::string& path) {
    f.validate_shape();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_grid: cannot open " + path);
    char header[32] = {};
    std::memcpy(header, grid_magic, 8);
    detail::put_u32_le(header + 8, static_cast<std::uint32_t>(f.n));
    detail::put_u32_le(header + 12, static_cast<std::uint32_t>(f.points_per_axis));
    detail::put_f64_le(header + 16, f.half_width);
    out.write(header, 32);
    std::vector<char> buf(16);
    for (const auto& z : f.samples) {
        detail::put_f64_le(buf.data(), z.real());
        detail::put_f64_le(buf.data() + 8, z.imag());
        out.write(buf.data(), 16);
    }
    if (!out) throw std::runtime_error("write_grid: write failed for " + path);
}

inline GridFunction read_grid(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("read_grid: cannot open " + path);
    char header[32];
    in.read(header, 32);
    if (!in || std::memcmp(header, grid_magic, 8) != 0)
        throw std::runtime_error("read_grid: bad magic in " + path);
    const int n = static_cast<int>(detail::get_u32_le(header + 8));
    const int N = static_cast<int>(detail::get_u32_le(header + 12));
    const double L = detail::get_f64_le(header + 16);
    GridFunction f(n, L, N);
    std::vector<char> buf(16);
    for (auto& z : f.samples) {
        in.read(buf.data(), 16);
        if (!in) throw std::runtime_error("read_grid: truncated payload in " + path);
        z = Complex(detail::get_f64_le(buf.data()), detail::get_f64_le(buf.data() + 8));
    }
    return f;
}

} // namespace strz
