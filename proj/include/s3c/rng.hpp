#pragma once

// Counter-based splittable randomness: every drawn number is a pure function
// of (seed, system, point index, dimension), so samples are bitwise
// reproducible regardless of evaluation order or thread schedule.

#include <cstdint>

namespace s3c {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t key_hash(std::uint64_t seed, std::uint64_t system,
                              std::uint64_t index, std::uint64_t dim) {
    std::uint64_t x = splitmix64(seed ^ 0x5851f42d4c957f2dULL);
    x = splitmix64(x ^ system * 0x9e3779b97f4a7c15ULL);
    x = splitmix64(x ^ index * 0xd1342543de82ef95ULL);
    x = splitmix64(x ^ dim * 0xaf251af3b0f025b5ULL);
    return x;
}

// uniform in [0,1), 53-bit mantissa
inline double uniform01(std::uint64_t seed, std::uint64_t system,
                        std::uint64_t index, std::uint64_t dim) {
    return static_cast<double>(key_hash(seed, system, index, dim) >> 11) * 0x1.0p-53;
}

inline double uniform(std::uint64_t seed, std::uint64_t system, std::uint64_t index,
                      std::uint64_t dim, double lo, double hi) {
    return lo + (hi - lo) * uniform01(seed, system, index, dim);
}

}  // namespace s3c
