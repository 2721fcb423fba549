#pragma once

#include <cstdint>
#include <random>
#include <vector>

// Reproducible randomness. Replicate streams are derived counter-style from
// (master_seed, index), so results do not depend on how work is split across
// threads. All draws go through the helpers below; std::*_distribution is
// avoided because its output is implementation-defined.

namespace grouptest {

// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Independent stream for the index-th unit of work under master_seed.
inline std::mt19937_64 substream(std::uint64_t master_seed, std::uint64_t index) {
    const std::uint64_t s = mix64(mix64(master_seed) ^ (index + 1));
    return std::mt19937_64(s);
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(std::mt19937_64& eng, double prob) {
    if (prob <= 0.0) return false;
    if (prob >= 1.0) return true;
    return uniform01(eng) < prob;
}

// Unbiased uniform draw from {0, ..., bound-1} via rejection sampling.
inline std::uint64_t uniform_index(std::mt19937_64& eng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = eng();
    while (x >= limit) x = eng();
    return x % bound;
}

// Fisher-Yates shuffle driven by uniform_index.
template <typename T>
void shuffle_vector(std::vector<T>& values, std::mt19937_64& eng) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_index(eng, i));
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace grouptest
