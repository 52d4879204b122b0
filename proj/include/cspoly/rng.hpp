// Seeded deterministic randomness for verification runs: splitmix64, with
// helpers for small rationals. Default seed 0xC5D0; identical seeds give
// identical streams on every platform.
#pragma once

#include <cstdint>

#include "rational.hpp"

namespace cspoly {

class Rng {
   public:
    explicit Rng(std::uint64_t seed = 0xC5D0) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

    long range(long lo, long hi) {  // inclusive
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // numerator in [-num_height, num_height], denominator in [1, den_height]
    Rational rational(long num_height = 1000000, long den_height = 1000) {
        long num = range(-num_height, num_height);
        long den = range(1, den_height);
        return Rational(num, den);
    }

    Rational nonzero_rational(long num_height = 1000000, long den_height = 1000) {
        for (;;) {
            Rational r = rational(num_height, den_height);
            if (!r.is_zero()) return r;
        }
    }

   private:
    std::uint64_t state_;
};

}  // namespace cspoly
