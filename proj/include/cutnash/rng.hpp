#pragma once

#include <cstdint>
#include <random>

namespace cutnash {

// splitmix64, used to spread user-provided seeds before feeding mt19937_64.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic engine for stream `index` of a top-level seed. Streams are
/// independent of evaluation order, so parallel consumers of distinct
/// indices reproduce the sequential results.
inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t index = 0) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(index + 0x51AB5F1ED15EA5EDULL)));
}

}  // namespace cutnash
