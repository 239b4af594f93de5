#ifndef NEVILLE_SAMPLING_HPP
#define NEVILLE_SAMPLING_HPP

#include "neville/errors.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace neville {

namespace detail {

// SplitMix64 finalizer: a bijective 64-bit mix with good avalanche.
inline std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace detail

/// The i-th draw of stream `seed` as a double in [0, 1) with 53 random bits.
/// Counter-based: a pure function of (seed, index), so any chunking or
/// evaluation order reproduces the same sequence.
inline double uniform01(std::uint64_t seed, std::uint64_t index) noexcept {
    const std::uint64_t z = detail::mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ull);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

/// The i-th draw of stream `seed`, scaled to [a, b).
inline double uniform_sample(std::uint64_t seed, std::uint64_t index, double a, double b) {
    return a + uniform01(seed, index) * (b - a);
}

/// Deterministic sequence of `count` uniform draws in [a, b);
/// element i equals uniform_sample(seed, i, a, b).
inline std::vector<double> uniform_samples(std::uint64_t seed, double a, double b,
                                           std::size_t count) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw NonFiniteInput{"sampling range"};
    if (a >= b)
        throw InvalidRange{"need a < b for uniform sampling"};
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(uniform_sample(seed, i, a, b));
    return out;
}

} // namespace neville

#endif // NEVILLE_SAMPLING_HPP
