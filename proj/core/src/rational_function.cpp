#include "dmop/rational_function.hpp"

#include <utility>

#include "dmop/errors.hpp"

namespace dmop {

RationalFunction::RationalFunction() : num_(), den_(Scalar(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw ZeroDenominator("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Scalar(1));
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree().value_or(0) > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Scalar lead = den_.leading();
  if (lead != 1) {
    const Scalar inv = Scalar(1) / lead;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
}

RationalFunction RationalFunction::shift_arg(const Scalar& t) const {
  return RationalFunction(num_.shift_arg(t), den_.shift_arg(t));
}

bool RationalFunction::defined_at(const Scalar& x) const { return den_(x) != 0; }

Scalar RationalFunction::operator()(const Scalar& x) const {
  const Scalar d = den_(x);
  if (d == 0) throw ZeroDenominator("rational function evaluated at a pole");
  return num_(x) / d;
}

std::string RationalFunction::str() const {
  return num_.str() + " / " + den_.str();
}

}  // namespace dmop
