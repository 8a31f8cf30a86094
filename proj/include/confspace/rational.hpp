#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace confspace {

// GMP keeps mpq_class canonical under arithmetic; values built from raw
// numerator/denominator pairs must go through make_rational.
using BigInt = mpz_class;
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "num/den" or "num" (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);

/// "num/den" in lowest terms, or "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

inline int sign(const Rational& q) { return sgn(q); }

/// Rational with the smallest denominator in the closed interval [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace confspace
