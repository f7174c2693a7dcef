#pragma once

#include <complex>
#include <cstdint>

namespace iscat {

// Counter-based random numbers.  Every draw is a pure function of
// (seed, stream, counter), so fields and ensembles are reproducible
// bit-for-bit no matter how work is split across threads.  The generator is a
// SplitMix64-style finalizer applied to the keyed counter; statistical quality
// is ample for Monte Carlo weights and spectral synthesis noise.
namespace rng {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t word(std::uint64_t seed, std::uint64_t stream,
                          std::uint64_t counter) {
    std::uint64_t z = mix64(seed ^ 0x6a09e667f3bcc909ull);
    z = mix64(z ^ stream);
    return mix64(z ^ (counter * 0xd1342543de82ef95ull));
}

// Uniform in (0,1]; never returns 0 so it is safe under log().
inline double uniform(std::uint64_t seed, std::uint64_t stream,
                      std::uint64_t counter) {
    return (double((word(seed, stream, counter) >> 11)) + 1.0) * 0x1.0p-53;
}

// Standard real normal via Box-Muller on counters (2c, 2c+1).
inline double normal(std::uint64_t seed, std::uint64_t stream,
                     std::uint64_t counter) {
    const double u1 = uniform(seed, stream, 2 * counter);
    const double u2 = uniform(seed, stream, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Proper standard complex normal: E g = 0, E g^2 = 0, E |g|^2 = 1.
inline std::complex<double> complex_normal(std::uint64_t seed,
                                           std::uint64_t stream,
                                           std::uint64_t counter) {
    const double u1 = uniform(seed, stream, 2 * counter);
    const double u2 = uniform(seed, stream, 2 * counter + 1);
    const double r = std::sqrt(-std::log(u1));  // so E|g|^2 = 1
    return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

// Derived seed for member `i` of an ensemble rooted at `seed`.
inline std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t i) {
    return mix64(seed ^ mix64(i ^ 0x5851f42d4c957f2dull));
}

}  // namespace rng
}  // namespace iscat
