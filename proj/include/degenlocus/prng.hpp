#ifndef DEGENLOCUS_PRNG_HPP
#define DEGENLOCUS_PRNG_HPP

#include <cstdint>
#include <random>

#include "degenlocus/rational.hpp"

namespace degenlocus {

// Deterministic seeded source for all samplers. Bounded draws are implemented
// by rejection on raw mt19937_64 output, so identical seeds give identical
// streams on every platform and standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    // Uniform integer in [lo, hi], inclusive.
    long next_int(long lo, long hi) {
        return lo + static_cast<long>(next_below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    // Small exact rational: numerator in [-9, 9], denominator in {1, 2, 3}.
    Rational next_rational() {
        long num = next_int(-9, 9);
        long den = next_int(1, 3);
        return Rational(num, den);
    }

    Rational next_nonzero_rational() {
        for (;;) {
            Rational r = next_rational();
            if (!r.is_zero()) return r;
        }
    }

    GaussianRational next_gaussian() { return GaussianRational(next_rational(), next_rational()); }

private:
    std::mt19937_64 eng_;
};

}  // namespace degenlocus

#endif
