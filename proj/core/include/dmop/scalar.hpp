#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace dmop {

// Exact rational scalar used on every construction and verification path.
// GMP keeps values canonical: positive denominator, gcd(num, den) == 1.
using Scalar = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

inline bool is_integer(const Scalar& s) { return denominator(s) == 1; }

inline bool is_nonnegative_integer(const Scalar& s) {
  return is_integer(s) && s >= 0;
}

// s is an integer lying in the closed interval [lo, hi].
inline bool is_integer_in(const Scalar& s, const Scalar& lo, const Scalar& hi) {
  return is_integer(s) && s >= lo && s <= hi;
}

BigInt floor_int(const Scalar& s);
BigInt ceil_int(const Scalar& s);

Scalar pow_int(const Scalar& base, unsigned exp);

// Strict parser for "p" or "p/q" (optional leading '-' on p; q > 0; no
// whitespace, no decimal point, no exponent). Throws ConfigError otherwise.
// This is the only scalar input path, so rationals never pass through
// floating point.
Scalar parse_scalar(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, else "p/q".
std::string to_string(const Scalar& s);

}  // namespace dmop
