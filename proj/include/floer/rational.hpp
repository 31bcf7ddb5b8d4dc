#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace floer {

// Exact arithmetic everywhere: rationals are GMP mpq (always canonical,
// lowest terms, positive denominator), integers are GMP mpz.
using Rational = mpq_class;
using Int = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

// True if |n| < 2^53, i.e. safe to emit as a plain JSON number.
inline bool fits_json_number(const Int& n) {
    static const Int limit = Int(1) << 53;
    return abs(n) < limit;
}

}  // namespace floer
