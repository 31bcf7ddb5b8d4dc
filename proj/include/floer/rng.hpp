#pragma once

#include <cstdint>

#include "floer/rational.hpp"

namespace floer {

// splitmix64: tiny, portable, identical streams on every platform. Draws
// below a bound use plain modulo so output never depends on the standard
// library's distribution implementations.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return next() % n; }

    // Uniform-ish small rational with numerator in [-max_num, max_num] and
    // denominator in [1, max_den].
    Rational small_rational(long max_num, long max_den) {
        long num = static_cast<long>(below(static_cast<std::uint64_t>(2 * max_num + 1))) - max_num;
        long den = 1 + static_cast<long>(below(static_cast<std::uint64_t>(max_den)));
        return rat(num, den);
    }
};

}  // namespace floer
