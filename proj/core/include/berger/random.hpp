#pragma once

#include <cstdint>
#include <random>

namespace berger {

// mt19937_64 has a fully specified output sequence; the standard
// distributions do not, so the helpers below are used instead to keep runs
// reproducible across standard libraries.
using Rng = std::mt19937_64;

inline std::uint64_t mixSeed(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform in [0, 1).
inline double uniformReal(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniformReal(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniformReal(rng); }

// Uniform in [0, n); n > 0.
inline std::uint64_t uniformIndex(Rng& rng, std::uint64_t n)
{
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = rng();
    while (x >= limit)
        x = rng();
    return x % n;
}

}  // namespace berger
