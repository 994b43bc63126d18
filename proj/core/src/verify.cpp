#include "dmop/verify.hpp"

#include <algorithm>
#include <string>

#include "dmop/errors.hpp"

namespace dmop {

namespace {

void require_lattice_index(const WeightSystem& system, int j) {
  if (j < 0 || j >= system.r()) {
    throw InvalidParameter("lattice index " + std::to_string(j) + " out of range");
  }
}

Scalar lattice_sum_exact(const LatticeMeasure& mu, const Polynomial& Q) {
  Scalar s(0);
  for (std::size_t k = 0; k < mu.values.size(); ++k) {
    s += Q(mu.gamma + Scalar(static_cast<long>(k))) * mu.values[k];
  }
  return s;
}

}  // namespace

Scalar exact_sum(const WeightSystem& system, int j, const Polynomial& Q) {
  require_lattice_index(system, j);
  const auto sz = system.support_size(j);
  if (!sz) throw InvalidParameter("exact_sum requires a finite lattice");
  return lattice_sum_exact(relative_weights(system, j, *sz), Q);
}

TruncatedSum certified_sum(const WeightSystem& system, int j, const Polynomial& Q,
                           const Scalar& tol) {
  require_lattice_index(system, j);
  if (system.support_size(j)) {
    throw InvalidParameter("certified_sum is for infinite lattices; lattice " +
                           std::to_string(j) + " is finite");
  }
  if (!(tol > 0)) throw InvalidParameter("tolerance must be positive");

  TruncatedSum out;
  out.theta = Scalar(1) / 2;
  if (!Q.degree()) return out;  // zero integrand: zero sum, zero tail

  const RationalFunction F = forward_ratio(system);
  const int dn = F.num().degree().value_or(-1);
  const int dd = F.den().degree().value();  // den is monic, never zero
  if (dn > dd) {
    throw TailNotContracting("term ratio grows: the forward ratio's numerator outweighs its "
                             "denominator");
  }
  Scalar L(0);
  if (dn == dd) L = abs(F.num().leading());
  if (L >= 1) {
    throw TailNotContracting("limiting term ratio " + to_string(L) + " admits no geometric tail");
  }
  const Scalar theta = std::max(Scalar(1) / 2, Scalar((1 + L) / 2));
  out.theta = theta;

  // Certify |t_{k+1}| <= theta |t_k| for every node past kstar:
  //   H(x) = theta^2 (Q(x) den(x))^2 - (Q(x+1) num(x))^2
  // has a positive leading coefficient (theta > L), so H > 0 strictly beyond
  // its Cauchy root bound.
  const Polynomial A = Q.shift_arg(Scalar(-1)) * F.num();
  const Polynomial D = Q * F.den();
  const Polynomial H = (theta * theta) * (D * D) - A * A;
  const Scalar bound = std::min(cauchy_root_bound(H), fujiwara_root_bound(H));
  const Scalar gamma = system.weights[static_cast<std::size_t>(j)].gamma;
  long kstar = 0;
  if (bound > gamma) kstar = floor_int(bound - gamma).convert_to<long>() + 1;
  if (kstar < 0) kstar = 0;
  out.kstar = static_cast<int>(kstar);

  const Scalar half_tol = tol / 2;
  const Scalar contraction = theta / (1 - theta);
  constexpr long kBudget = 200000;
  Scalar w(1);
  Scalar sum(0);
  for (long k = 0;; ++k) {
    if (k > kBudget) {
      throw NoConvergence("lattice sum did not reach its tail bound within " +
                          std::to_string(kBudget) + " terms");
    }
    const Scalar x = gamma + Scalar(k);
    const Scalar t = Q(x) * w;
    sum += t;
    out.terms = static_cast<int>(k + 1);
    if (k >= kstar) {
      const Scalar tail = abs(t) * contraction;
      if (tail <= half_tol) {
        out.tail_bound = tail;
        break;
      }
    }
    if (!F.defined_at(x)) {
      throw PoleOnLattice("forward ratio undefined at node " + to_string(x));
    }
    w *= F(x);
  }
  out.value = sum;
  return out;
}

OrthogonalityReport orthogonality_residuals(const WeightSystem& system, const Polynomial& P,
                                            int n, const Scalar& tol) {
  if (n < 0) throw InvalidParameter("order must be >= 0");
  if (!(tol > 0)) throw InvalidParameter("tolerance must be positive");
  OrthogonalityReport rep;
  rep.tol = tol;
  rep.pass = true;
  for (int j = 0; j < system.r(); ++j) {
    const auto sz = system.support_size(j);
    std::optional<LatticeMeasure> mu;
    if (sz && n > 0) mu = relative_weights(system, j, *sz);
    for (int k = 0; k < n; ++k) {
      OrthogonalityEntry e;
      e.lattice = j;
      e.power = k;
      const Polynomial Q = P * Polynomial::monomial(static_cast<unsigned>(k));
      if (sz) {
        e.exact = true;
        e.residual = lattice_sum_exact(*mu, Q);
        e.tail_bound = 0;
        e.terms = *sz;
        e.pass = (e.residual == 0);
      } else {
        e.exact = false;
        const TruncatedSum ts = certified_sum(system, j, Q, tol);
        e.residual = ts.value;
        e.tail_bound = ts.tail_bound;
        e.terms = ts.terms;
        e.pass = abs(ts.value) + ts.tail_bound <= tol;
      }
      rep.pass = rep.pass && e.pass;
      rep.entries.push_back(std::move(e));
    }
  }
  return rep;
}

MomentSystem moment_matrix(const WeightSystem& system, int n, const Scalar& tol) {
  if (n < 0) throw InvalidParameter("order must be >= 0");
  const int r = system.r();
  const int cols = r * n + 1;
  const int smax = n - 1 + r * n;

  MomentSystem out;
  out.entry_tail_bound = 0;
  if (n == 0) return out;

  std::vector<std::vector<Scalar>> ps(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    auto& row = ps[static_cast<std::size_t>(j)];
    row.assign(static_cast<std::size_t>(smax) + 1, Scalar(0));
    if (const auto sz = system.support_size(j)) {
      const LatticeMeasure mu = relative_weights(system, j, *sz);
      for (int k = 0; k < *sz; ++k) {
        const Scalar x = mu.gamma + Scalar(k);
        Scalar p(1);
        for (int s = 0; s <= smax; ++s) {
          row[static_cast<std::size_t>(s)] += p * mu.values[static_cast<std::size_t>(k)];
          p *= x;
        }
      }
    } else {
      out.truncated = true;
      for (int s = 0; s <= smax; ++s) {
        const TruncatedSum ts =
            certified_sum(system, j, Polynomial::monomial(static_cast<unsigned>(s)), tol);
        row[static_cast<std::size_t>(s)] = ts.value;
        out.entry_tail_bound = std::max(out.entry_tail_bound, ts.tail_bound);
      }
    }
  }

  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < n; ++k) {
      std::vector<Scalar> mrow(static_cast<std::size_t>(cols));
      for (int i = 0; i < cols; ++i) {
        mrow[static_cast<std::size_t>(i)] = ps[static_cast<std::size_t>(j)][static_cast<std::size_t>(k + i)];
      }
      out.matrix.push_back(std::move(mrow));
    }
  }
  return out;
}

int rref(std::vector<std::vector<Scalar>>& m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
    const Scalar p = m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    for (auto& e : m[static_cast<std::size_t>(rank)]) e /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == rank) continue;
      const Scalar f = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int c = 0; c < cols; ++c) {
        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] -=
            f * m[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  const int rank = rref(m);
  std::vector<int> pivot_col;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int i = 0; i < rank; ++i) {
    int c = 0;
    while (c < cols && m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] == 0) ++c;
    pivot_col.push_back(c);
    is_pivot[static_cast<std::size_t>(c)] = true;
  }
  std::vector<std::vector<Scalar>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Scalar> v(static_cast<std::size_t>(cols), Scalar(0));
    v[static_cast<std::size_t>(f)] = 1;
    for (int i = 0; i < rank; ++i) {
      v[static_cast<std::size_t>(pivot_col[static_cast<std::size_t>(i)])] =
          -m[static_cast<std::size_t>(i)][static_cast<std::size_t>(f)];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

OracleComparison compare_with_moment_oracle(const WeightSystem& system, const Polynomial& P,
                                            int n, const Scalar& tol, bool expect_unique) {
  OracleComparison out;
  const int r = system.r();
  const int m = r * n;
  if (P.degree() != std::optional<int>(m)) {
    out.detail = "polynomial degree differs from r*n";
    return out;
  }

  MomentSystem ms = moment_matrix(system, n, tol);
  out.truncated = ms.truncated;

  if (ms.matrix.empty()) {  // n == 0: every nonzero constant qualifies
    out.nullity = 1;
    out.pass = true;
    out.rel_error = 0;
    out.detail = "no conditions at order 0";
    return out;
  }

  if (!ms.truncated) {
    std::vector<Scalar> c(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) c[static_cast<std::size_t>(i)] = P.coeff(static_cast<unsigned>(i));
    bool annihilated = true;
    for (const auto& row : ms.matrix) {
      Scalar acc(0);
      for (int i = 0; i <= m; ++i) acc += row[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
      if (acc != 0) {
        annihilated = false;
        break;
      }
    }
    const auto basis = nullspace(ms.matrix);
    out.nullity = static_cast<int>(basis.size());
    if (out.nullity < 1) {
      throw SingularConstruction("moment system has an empty nullspace");
    }
    out.rel_error = 0;
    out.pass = annihilated && (!expect_unique || out.nullity == 1);
    if (!annihilated) {
      out.detail = "a moment row does not vanish on the coefficients";
    } else if (!out.pass) {
      out.detail = "nullity " + std::to_string(out.nullity) + " where uniqueness was expected";
    } else {
      out.detail = "coefficients annihilate every moment row";
    }
    return out;
  }

  // Truncated path: normalize to a monic solution and solve the remaining
  // square system exactly, then compare coefficients numerically.
  std::vector<std::vector<Scalar>> aug;
  aug.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto& row = ms.matrix[static_cast<std::size_t>(i)];
    std::vector<Scalar> a(row.begin(), row.begin() + m);
    a.push_back(-row[static_cast<std::size_t>(m)]);
    aug.push_back(std::move(a));
  }
  if (rref(aug) < m) {
    throw SingularConstruction("truncated moment system is rank-deficient");
  }

  const Polynomial Pm = P.monic();
  PrecisionGuard guard(256);
  BigFloat scale(1);
  for (int i = 0; i <= m; ++i) {
    const BigFloat a = abs(to_bigfloat(Pm.coeff(static_cast<unsigned>(i))));
    if (a > scale) scale = a;
  }
  BigFloat worst(0);
  for (int i = 0; i < m; ++i) {
    const BigFloat diff = abs(to_bigfloat(aug[static_cast<std::size_t>(i)][static_cast<std::size_t>(m)] -
                                          Pm.coeff(static_cast<unsigned>(i))));
    if (diff > worst) worst = diff;
  }
  out.rel_error = worst / scale;
  out.pass = out.rel_error < BigFloat("1e-20");
  out.detail = out.pass ? "reconstructed coefficients match to the pinned relative tolerance"
                        : "reconstructed coefficients deviate beyond the pinned relative tolerance";
  return out;
}

PearsonPair derive_pearson(const WeightSystem& system) {
  const RatioParts parts = forward_ratio_parts(system);
  PearsonPair pp;
  pp.sigma = parts.den.shift_arg(Scalar(1));  // den(x-1)
  pp.tau = parts.num - pp.sigma;
  const int r = system.r();
  const auto ds = pp.sigma.degree();
  const auto dt = pp.tau.degree();
  if (!ds || *ds > r + 1) {
    throw DegreeBoundViolated("sigma has degree " + (ds ? std::to_string(*ds) : std::string("-inf")) +
                              ", bound is r+1 = " + std::to_string(r + 1));
  }
  if (dt != std::optional<int>(r)) {
    throw DegreeBoundViolated("tau has degree " + (dt ? std::to_string(*dt) : std::string("-inf")) +
                              ", expected exactly r = " + std::to_string(r));
  }
  return pp;
}

PearsonCheckReport check_pearson(const WeightSystem& system, int nodes_per_lattice) {
  PearsonCheckReport rep;
  PearsonPair pp;
  try {
    pp = derive_pearson(system);
  } catch (const DegreeBoundViolated&) {
    return rep;  // all fields false
  }
  rep.degrees_ok = true;

  const RationalFunction F = forward_ratio(system);
  rep.identity_ok = (pp.sigma.shift_arg(Scalar(-1)) * F.num() == (pp.sigma + pp.tau) * F.den());

  rep.nodes_ok = true;
  for (int j = 0; j < system.r() && rep.nodes_ok; ++j) {
    int count = nodes_per_lattice + 1;
    if (const auto sz = system.support_size(j); sz && *sz < count) count = *sz;
    const LatticeMeasure mu = relative_weights(system, j, count);
    for (int k = 0; k + 1 < count; ++k) {
      const Scalar x = mu.gamma + Scalar(k);
      const Scalar lhs = pp.sigma(x + 1) * mu.values[static_cast<std::size_t>(k) + 1] -
                         pp.sigma(x) * mu.values[static_cast<std::size_t>(k)];
      if (lhs != pp.tau(x) * mu.values[static_cast<std::size_t>(k)]) {
        rep.nodes_ok = false;
        break;
      }
    }
  }

  rep.pass = rep.degrees_ok && rep.identity_ok && rep.nodes_ok;
  return rep;
}

}  // namespace dmop
