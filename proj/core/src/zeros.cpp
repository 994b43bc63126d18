#include "dmop/zeros.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

#include "dmop/errors.hpp"

namespace dmop {

namespace {

Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
Cplx operator*(const Cplx& a, const Cplx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cplx operator/(const Cplx& a, const Cplx& b) {
  const BigFloat d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

BigFloat norm2(const Cplx& z) { return z.re * z.re + z.im * z.im; }

// log2 of |s| to within +-1, from limb counts alone; INT_MIN marker for 0.
long log2_estimate(const Scalar& s) {
  if (s == 0) return std::numeric_limits<long>::min();
  const BigInt num = abs(numerator(s));
  const BigInt den = denominator(s);
  return static_cast<long>(msb(num)) - static_cast<long>(msb(den));
}

// Fujiwara-style radius: every root satisfies |z| < 2 * max_k |c_{d-k}/c_d|^{1/k}.
// Computed on log2 estimates so huge rational coefficients stay cheap.
BigFloat initial_radius(const std::vector<Scalar>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  const long lead = log2_estimate(c[static_cast<std::size_t>(d)]);
  long best = std::numeric_limits<long>::min();
  for (int k = 1; k <= d; ++k) {
    const long lk = log2_estimate(c[static_cast<std::size_t>(d - k)]);
    if (lk == std::numeric_limits<long>::min()) continue;
    // ceil of (lk - lead + 2) / k
    const long numr = lk - lead + 2;
    long e = numr / k;
    if (numr > 0 && numr % k != 0) ++e;
    best = std::max(best, e);
  }
  if (best == std::numeric_limits<long>::min()) best = 0;  // p = c x^d: all roots at 0
  best = std::min(best, 4096L);
  return ldexp(BigFloat(1), static_cast<int>(best) + 1);
}

struct Lcg {
  std::uint64_t state = 0x9E3779B97F4A7C15ull;
  // uniform in [0, 1) with 53 random bits
  double next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<double>(state >> 11) * 0x1.0p-53;
  }
};

}  // namespace

BigFloat abs_c(const Cplx& z) { return sqrt(z.re * z.re + z.im * z.im); }

std::vector<Cplx> find_zeros(const Polynomial& p, unsigned bits) {
  if (p.is_zero()) throw InvalidParameter("the zero polynomial has no root set");
  const int d = *p.degree();
  if (d == 0) return {};
  if (bits < 64) bits = 64;

  PrecisionGuard guard(bits);

  // Monic coefficients at working precision.
  const std::vector<Scalar>& rc = p.coeffs();
  std::vector<BigFloat> c(static_cast<std::size_t>(d) + 1);
  std::vector<BigFloat> cabs(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    c[static_cast<std::size_t>(i)] =
        to_bigfloat(rc[static_cast<std::size_t>(i)] / rc[static_cast<std::size_t>(d)]);
    cabs[static_cast<std::size_t>(i)] = abs(c[static_cast<std::size_t>(i)]);
  }

  // Deterministically jittered circle of starting points.
  const BigFloat radius = initial_radius(rc);
  const BigFloat pi = 4 * atan(BigFloat(1));
  Lcg lcg;
  std::vector<Cplx> z(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    const BigFloat angle =
        2 * pi * (BigFloat(i) + BigFloat(0.3) + BigFloat(0.4) * BigFloat(lcg.next())) / d;
    const BigFloat r = radius * (1 + BigFloat(i) / (8 * d));
    z[static_cast<std::size_t>(i)] = {r * cos(angle), r * sin(angle)};
  }

  const BigFloat stop = ldexp(BigFloat(1), -static_cast<int>(bits / 2));
  const BigFloat resid_stop = ldexp(BigFloat(1), -static_cast<int>(3 * bits / 4));
  const int budget = 400;

  for (int iter = 0; iter < budget; ++iter) {
    BigFloat worst(0);
    for (int i = 0; i < d; ++i) {
      Cplx& zi = z[static_cast<std::size_t>(i)];

      // p, p' and the evaluation scale sum |c_k| |z|^k in one sweep.
      Cplx pv{c[static_cast<std::size_t>(d)], BigFloat(0)};
      Cplx dv{BigFloat(0), BigFloat(0)};
      const BigFloat az = abs_c(zi);
      BigFloat scale = cabs[static_cast<std::size_t>(d)];
      for (int k = d - 1; k >= 0; --k) {
        dv = dv * zi + pv;
        pv = pv * zi;
        pv.re += c[static_cast<std::size_t>(k)];
        scale = scale * az + cabs[static_cast<std::size_t>(k)];
      }

      if (abs_c(pv) <= resid_stop * scale) continue;  // converged (root clusters plateau here)

      if (norm2(dv) == 0) {  // stationary point: nudge off it
        zi.re += (1 + az) / (iter + 2);
        worst = 1;
        continue;
      }
      const Cplx newton = pv / dv;
      Cplx ssum{BigFloat(0), BigFloat(0)};
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        const Cplx diff = zi - z[static_cast<std::size_t>(j)];
        if (norm2(diff) == 0) continue;  // coincident guesses separate on later sweeps
        ssum = ssum + Cplx{BigFloat(1), BigFloat(0)} / diff;
      }
      Cplx denom = Cplx{BigFloat(1), BigFloat(0)} - newton * ssum;
      Cplx w = (norm2(denom) == 0) ? newton : newton / denom;
      zi = zi - w;
      const BigFloat rel = abs_c(w) / std::max(BigFloat(1), az);
      if (rel > worst) worst = rel;
    }
    if (worst < stop) {
      std::sort(z.begin(), z.end(), [](const Cplx& a, const Cplx& b) {
        return a.re < b.re || (a.re == b.re && a.im < b.im);
      });
      return z;
    }
  }
  throw NoConvergence("root iteration exhausted its budget of 400 sweeps at " +
                      std::to_string(bits) + " bits");
}

std::vector<Cplx> find_zeros_adaptive(const Polynomial& p, unsigned start_bits, unsigned max_bits,
                                      const Scalar& agree_tol) {
  if (p.is_zero()) throw InvalidParameter("the zero polynomial has no root set");
  if (*p.degree() == 0) return {};

  PrecisionGuard guard(max_bits);
  const BigFloat tol = to_bigfloat(agree_tol);

  std::vector<Cplx> prev;
  bool have_prev = false;
  for (unsigned bits = start_bits; bits <= max_bits; bits *= 2) {
    std::vector<Cplx> cur;
    try {
      cur = find_zeros(p, bits);
    } catch (const NoConvergence&) {
      have_prev = false;
      continue;  // retry at the doubled precision
    }
    if (have_prev) {
      BigFloat worst(0);
      for (std::size_t i = 0; i < cur.size(); ++i) {
        const BigFloat delta = abs_c(Cplx{cur[i].re - prev[i].re, cur[i].im - prev[i].im});
        if (delta > worst) worst = delta;
      }
      if (worst <= tol) return cur;
    }
    prev = std::move(cur);
    have_prev = true;
  }
  throw NoConvergence("consecutive precision levels did not agree up to " + to_string(agree_tol));
}

ZeroReport zero_report(const std::vector<Cplx>& zeros, const WeightSystem& system,
                       const Scalar& real_tol) {
  if (!(real_tol > 0)) throw InvalidParameter("real_tol must be positive");
  PrecisionGuard guard(256);
  const BigFloat rtol = to_bigfloat(real_tol);

  ZeroReport rep;
  rep.zeros.reserve(zeros.size());
  rep.per_hull.assign(static_cast<std::size_t>(system.r()), 0);
  rep.max_im_real = 0;
  rep.min_pair_distance = std::numeric_limits<BigFloat>::infinity();

  for (const Cplx& z : zeros) {
    ZeroInfo info;
    info.re = z.re;
    info.im = z.im;
    info.is_real = abs(z.im) <= rtol;
    if (info.is_real) {
      ++rep.real_count;
      if (abs(z.im) > rep.max_im_real) rep.max_im_real = abs(z.im);
      for (int j = 0; j < system.r(); ++j) {
        const Interval h = system.hull(j);
        const BigFloat lo = to_bigfloat(h.lo) - rtol;
        if (z.re < lo) continue;
        if (h.hi && z.re > to_bigfloat(*h.hi) + rtol) continue;
        info.hull = j;
        ++rep.per_hull[static_cast<std::size_t>(j)];
        break;
      }
    } else {
      ++rep.complex_count;
    }
    rep.zeros.push_back(std::move(info));
  }

  std::sort(rep.zeros.begin(), rep.zeros.end(), [](const ZeroInfo& a, const ZeroInfo& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });

  // Every nonreal zero must have a conjugate partner at the solver's scale.
  rep.conjugates_ok = true;
  std::vector<bool> used(rep.zeros.size(), false);
  for (std::size_t i = 0; i < rep.zeros.size(); ++i) {
    if (rep.zeros[i].is_real || used[i]) continue;
    bool matched = false;
    for (std::size_t j = 0; j < rep.zeros.size(); ++j) {
      if (j == i || rep.zeros[j].is_real || used[j]) continue;
      const BigFloat dre = abs(rep.zeros[i].re - rep.zeros[j].re);
      const BigFloat dim = abs(rep.zeros[i].im + rep.zeros[j].im);
      if (dre <= rtol && dim <= rtol) {
        used[i] = used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) rep.conjugates_ok = false;
  }

  for (std::size_t i = 0; i < rep.zeros.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.zeros.size(); ++j) {
      const BigFloat dist = abs_c(Cplx{rep.zeros[i].re - rep.zeros[j].re,
                                       rep.zeros[i].im - rep.zeros[j].im});
      if (dist < rep.min_pair_distance) rep.min_pair_distance = dist;
    }
  }
  return rep;
}

}  // namespace dmop
