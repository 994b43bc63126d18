#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include "dmop/scalar.hpp"

namespace dmop {

// Variable-precision binary float. Precision is a process-wide default in
// decimal digits; PrecisionGuard scopes a change to it.
using BigFloat = boost::multiprecision::mpfr_float;

inline unsigned digits_for_bits(unsigned bits) {
  // ceil(bits * log10(2)) plus guard digits
  return static_cast<unsigned>(static_cast<double>(bits) * 0.30103) + 4;
}

class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits) : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits_for_bits(bits));
  }
  ~PrecisionGuard() { BigFloat::default_precision(saved_); }
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

// Exact quotient of the rational's parts, rounded once at the current
// default precision.
inline BigFloat to_bigfloat(const Scalar& s) {
  return BigFloat(numerator(s)) / BigFloat(denominator(s));
}

}  // namespace dmop
