#ifndef PLAP_RNG_HPP
#define PLAP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace plap {

// All randomness in the library flows through these helpers so that a fixed
// seed produces the same stream on every platform (the distributions in
// <random> are implementation-defined, the engine is not).

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream = 0) {
    return std::mt19937_64(mix_seed(seed, stream));
}

// uniform in [0, 1)
inline double uniform_double(std::mt19937_64& g) {
    return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& g, double a, double b) {
    return a + (b - a) * uniform_double(g);
}

// uniform integer in [0, n), unbiased
inline std::uint64_t uniform_below(std::mt19937_64& g, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = g();
    } while (x >= limit);
    return x % n;
}

// standard normal via Box-Muller
inline double normal(std::mt19937_64& g) {
    double u1;
    do {
        u1 = uniform_double(g);
    } while (u1 <= 0.0);
    const double u2 = uniform_double(g);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

}  // namespace plap

#endif
