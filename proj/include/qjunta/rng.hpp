#pragma once

#include <cstdint>
#include <random>

namespace qjunta {

using Rng = std::mt19937_64;

// SplitMix64 output function (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Seed for the k-th derived stream of `base`. Used wherever one run seed
// has to fan out into independent per-variable or per-fixture generators.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    return splitmix64(base + (stream + 1) * 0x9e3779b97f4a7c15ull);
}

// Uniform integer in [0, bound). bound == 0 or 1 returns 0 without
// consuming randomness. Rejection sampling keeps the draw unbiased and
// the byte stream identical across standard libraries.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~0ull - (~0ull % bound + 1) % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r > limit);
    return r % bound;
}

// Uniform double in [0, 1) with 53 random bits; platform-independent.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qjunta
