#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>

namespace openworld {

// Project-wide RNG is std::mt19937_64: its output sequence is pinned by the
// standard, so a fixed seed reproduces bit-identical runs on any platform.
// Variate helpers are hand-rolled below because std:: distributions are
// allowed to differ between standard libraries.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) using the top 53 bits.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform index in [0, n). n must be > 0.
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
    std::size_t i = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
    return i < n ? i : n - 1;
}

// Index drawn proportionally to non-negative weights; uniform when the total
// mass is zero.
inline std::size_t weighted_index(Rng& rng, std::span<const double> weights) {
    double total = 0.0;
    for (double w : weights) total += w > 0.0 ? w : 0.0;
    if (!(total > 0.0)) return uniform_index(rng, weights.size());
    double u = uniform01(rng) * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i] > 0.0 ? weights[i] : 0.0;
        if (u < acc) return i;
    }
    return weights.size() - 1;
}

// FNV-1a, used to derive per-segment seeds from string ids deterministically.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace openworld
