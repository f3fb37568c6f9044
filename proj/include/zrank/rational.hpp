#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace zrank {

// Exact rationals and integers are GMP values; mpq_class keeps itself
// canonical (positive denominator, reduced) after every arithmetic op.
using Integer = mpz_class;
using Rational = mpq_class;

/// Always renders as "num/den", including integers ("3/1", "0/1").
std::string to_fraction_string(const Rational& q);

/// Accepts "num/den" or a bare integer; the result is canonicalized.
Rational parse_fraction(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

Rational make_rational(long num, long den = 1);

}  // namespace zrank
