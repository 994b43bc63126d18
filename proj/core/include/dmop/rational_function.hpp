#pragma once

#include "dmop/polynomial.hpp"

namespace dmop {

// Quotient of two polynomials kept in lowest terms with a monic denominator.
// Both invariants are restored by every constructor and operation, so two
// equal rational functions always compare equal componentwise.
class RationalFunction {
 public:
  // 0/1
  RationalFunction();
  // num/den, normalized. Throws ZeroDenominator when den == 0.
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  RationalFunction operator*(const RationalFunction& rhs) const;
  bool operator==(const RationalFunction& rhs) const = default;

  // f(x - t)
  RationalFunction shift_arg(const Scalar& t) const;

  bool defined_at(const Scalar& x) const;
  // Throws ZeroDenominator when x is a pole (den(x) == 0).
  Scalar operator()(const Scalar& x) const;

  std::string str() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

}  // namespace dmop
