// Copyright (c) 2026 evoprune contributors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic RNG utilities. std::uniform_int_distribution and
// std::normal_distribution are implementation-defined, so every sampling
// primitive we rely on for reproducibility is implemented here on top of
// the (standardized) mt19937_64 engine.

#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace evoprune {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b) {
    return splitmix64(a ^ (splitmix64(b) + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2)));
}

template <typename... Rest>
std::uint64_t hash_combine(std::uint64_t a, std::uint64_t b, Rest... rest) {
    return hash_combine(hash_combine(a, b), static_cast<std::uint64_t>(rest)...);
}

// Stream seeds for per-candidate work: identical regardless of scheduling.
inline std::uint64_t stream_seed(std::uint64_t root, std::uint64_t generation,
                                 std::uint64_t candidate, std::uint64_t step) {
    return hash_combine(root, generation, candidate, step);
}

class UniformRng {
public:
    explicit UniformRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [lo, hi], inclusive. Rejection sampling keeps the result
    // independent of the standard library.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
        if (range == 0) {
            return static_cast<std::int64_t>(next_u64());  // full 64-bit range
        }
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
        std::uint64_t v = next_u64();
        while (v >= limit) {
            v = next_u64();
        }
        return lo + static_cast<std::int64_t>(v % range);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double uniform_real() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Box-Muller; one spare kept to match call counts across platforms.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform_real();
        while (u1 <= 0.0) {
            u1 = uniform_real();
        }
        const double u2 = uniform_real();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace evoprune
