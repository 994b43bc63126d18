#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dmop/scalar.hpp"

namespace dmop {

// Dense univariate polynomial over the exact rationals, stored low order
// first and always trimmed (no trailing zero coefficients). The zero
// polynomial has an empty coefficient vector and degree() == nullopt; the
// nullopt plays the role of degree minus infinity, so the degree of a
// nonzero constant (0) and "no degree at all" can never be confused.
class Polynomial {
 public:
  Polynomial() = default;                       // zero polynomial
  explicit Polynomial(Scalar constant);
  explicit Polynomial(std::vector<Scalar> coeffs);  // trims trailing zeros

  // c * x^k
  static Polynomial monomial(unsigned k, Scalar c = Scalar(1));
  // The identity polynomial x.
  static Polynomial x();

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<int> degree() const;

  // Coefficient of x^k; zero beyond the degree.
  const Scalar& coeff(unsigned k) const;
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  // Leading coefficient; requires a nonzero polynomial.
  const Scalar& leading() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& rhs) const;
  Polynomial operator-(const Polynomial& rhs) const;
  Polynomial operator*(const Polynomial& rhs) const;
  Polynomial operator*(const Scalar& c) const;
  bool operator==(const Polynomial& rhs) const = default;

  // p(x - t): substitution of a shifted argument, computed exactly by
  // synthetic reconstruction (Horner against the factor (x - t)).
  Polynomial shift_arg(const Scalar& t) const;

  // Horner evaluation.
  Scalar operator()(const Scalar& x) const;

  Polynomial derivative() const;

  // Scale to leading coefficient 1; requires a nonzero polynomial.
  Polynomial monic() const;

  // Human-readable coefficient list "[c0, c1, ...]" for diagnostics.
  std::string str() const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

inline Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

// Euclidean division a = q*b + r with deg r < deg b. Throws ZeroDenominator
// when b is the zero polynomial.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic greatest common divisor; gcd(0, 0) is defined as 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// Cauchy bound: every real or complex root z of p satisfies
// |z| < 1 + max_{i < d} |c_i / c_d|. Requires a nonzero polynomial.
Scalar cauchy_root_bound(const Polynomial& p);

// Fujiwara-style bound: every root z satisfies
// |z| <= 2 * max_{1<=k<=d} |c_{d-k} / c_d|^{1/k}. Returned as a power of two
// that provably dominates the right-hand side (computed from exact integer
// log2 bounds, so no rounding can under-estimate). Far tighter than the
// Cauchy bound when interior coefficients dwarf the leading one. Requires a
// nonzero polynomial; returns 1 for a pure monomial.
Scalar fujiwara_root_bound(const Polynomial& p);

}  // namespace dmop
