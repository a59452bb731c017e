#pragma once

#include <cmath>
#include <cstdint>

#include "lpdec/rational.hpp"

namespace lpdec {

/// Counter-based pseudo-randomness. Every draw is a pure function of the
/// key words, so trials keyed by (seed, trial, coordinate) are reproducible
/// regardless of evaluation order.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t hash_key(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0,
                              std::uint64_t d = 0) {
    std::uint64_t h = mix64(a);
    h = mix64(h ^ b);
    h = mix64(h ^ c);
    h = mix64(h ^ d);
    return h;
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::uint64_t key) { return static_cast<double>(key >> 11) * 0x1.0p-53; }

/// Standard Gaussian via Box-Muller on two keyed uniforms.
inline double gaussian(std::uint64_t key_a, std::uint64_t key_b) {
    const double u1 = static_cast<double>((key_a >> 11) + 1) * 0x1.0p-53; // (0, 1]
    const double u2 = uniform01(key_b);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
}

/// Sequential deterministic stream for test harnesses and experiment drivers.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64() { return hash_key(seed_, ++counter_); }

    /// Uniform integer in [lo, hi] (inclusive).
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double next_uniform01() { return uniform01(next_u64()); }

    bool next_bool(double p) { return next_uniform01() < p; }

    /// Nonzero rational with numerator in [-max_num, max_num] and denominator
    /// in [1, max_den].
    Rat next_nonzero_rat(long max_num = 9, long max_den = 9) {
        for (;;) {
            long num = next_int(-max_num, max_num);
            if (num == 0) continue;
            long den = next_int(1, max_den);
            return make_rat(num, den);
        }
    }

    /// Rational in [-max_num/den_fixed, max_num/den_fixed], zero allowed.
    Rat next_small_rat(long max_num, long den_fixed) {
        return make_rat(next_int(-max_num, max_num), den_fixed);
    }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

} // namespace lpdec
