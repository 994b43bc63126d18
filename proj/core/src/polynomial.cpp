#include "dmop/polynomial.hpp"

#include <utility>

#include "dmop/errors.hpp"

namespace dmop {

namespace {
const Scalar kZero(0);
}

Polynomial::Polynomial(Scalar constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(unsigned k, Scalar c) {
  if (c == 0) return Polynomial();
  std::vector<Scalar> v(k + 1, Scalar(0));
  v[k] = std::move(c);
  Polynomial p;
  p.coeffs_ = std::move(v);
  return p;
}

Polynomial Polynomial::x() { return monomial(1); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<int> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

const Scalar& Polynomial::coeff(unsigned k) const {
  if (k >= coeffs_.size()) return kZero;
  return coeffs_[k];
}

const Scalar& Polynomial::leading() const {
  if (coeffs_.empty()) throw ZeroDenominator("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
  std::vector<Scalar> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] += rhs.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
  std::vector<Scalar> v(std::max(coeffs_.size(), rhs.coeffs_.size()), Scalar(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) v[i] -= rhs.coeffs_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Scalar> v(coeffs_.size() + rhs.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (c == 0) return Polynomial();
  Polynomial out = *this;
  for (auto& a : out.coeffs_) a *= c;
  return out;
}

Polynomial Polynomial::shift_arg(const Scalar& t) const {
  // p(x - t) by Horner: run through the coefficients high to low,
  // multiplying the accumulator by (x - t) at each step.
  const Polynomial factor(std::vector<Scalar>{-t, Scalar(1)});
  Polynomial acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * factor + Polynomial(coeffs_[i]);
  }
  return acc;
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * x + coeffs_[i];
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Scalar> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    v[i - 1] = coeffs_[i] * Scalar(static_cast<long>(i));
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  return *this * (Scalar(1) / leading());
}

std::string Polynomial::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(coeffs_[i]);
  }
  out += "]";
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroDenominator("polynomial division by zero");
  if (a.is_zero() || *a.degree() < *b.degree()) return {Polynomial(), a};
  const int db = *b.degree();
  std::vector<Scalar> rem(a.coeffs());
  std::vector<Scalar> quo(a.coeffs().size() - db, Scalar(0));
  const Scalar& lead_b = b.leading();
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    if (rem[i] == 0) continue;
    const Scalar q = rem[i] / lead_b;
    quo[i - db] = q;
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] -= q * b.coeff(j);
    }
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Scalar cauchy_root_bound(const Polynomial& p) {
  const Scalar& lead = p.leading();
  Scalar m(0);
  const auto& cs = p.coeffs();
  for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
    Scalar q = abs(cs[i] / lead);
    if (q > m) m = q;
  }
  return m + 1;
}

Scalar fujiwara_root_bound(const Polynomial& p) {
  const int d = p.degree().value();  // throws on the zero polynomial via leading() below
  const Scalar& lead = p.leading();
  // log2|x| brackets from limb positions: 2^msb(n) <= n < 2^(msb(n)+1).
  const auto log2_lower = [](const Scalar& s) {
    return static_cast<long>(msb(abs(numerator(s)))) -
           static_cast<long>(msb(denominator(s))) - 1;
  };
  const auto log2_upper = [](const Scalar& s) {
    return static_cast<long>(msb(abs(numerator(s)))) + 1 -
           static_cast<long>(msb(denominator(s)));
  };
  const long lead_lb = log2_lower(lead);
  bool any = false;
  long best = 0;
  for (int k = 1; k <= d; ++k) {
    const Scalar& c = p.coeff(static_cast<unsigned>(d - k));
    if (c == 0) continue;
    const long diff = log2_upper(c) - lead_lb;  // upper bound on log2|c/lead|
    long e = diff / k;
    if (diff > 0 && diff % k != 0) ++e;  // ceil
    if (!any || e > best) best = e;
    any = true;
  }
  if (!any) return Scalar(1);  // pure monomial: the only root is 0
  const long exp = best + 1;   // the factor 2 in front
  if (exp >= 0) return Scalar(BigInt(1) << exp);
  return Scalar(1) / Scalar(BigInt(1) << (-exp));
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a, v = b;
  while (!v.is_zero()) {
    Polynomial r = divmod(u, v).second;
    u = std::move(v);
    v = std::move(r);
    // Keep intermediate remainders monic to bound coefficient growth.
    if (!v.is_zero()) v = v.monic();
  }
  if (u.is_zero()) return u;
  return u.monic();
}

}  // namespace dmop
