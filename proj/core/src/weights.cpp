#include "dmop/weights.hpp"

#include <utility>

#include "dmop/errors.hpp"

namespace dmop {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw InvalidParameter(msg); }

Polynomial linear(const Scalar& c0, const Scalar& c1) {
  return Polynomial(std::vector<Scalar>{c0, c1});
}

int sign_of(const Scalar& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

std::string kind_name(WeightKind kind) {
  switch (kind) {
    case WeightKind::Charlier: return "charlier";
    case WeightKind::Meixner: return "meixner";
    case WeightKind::Kravchuk: return "kravchuk";
    case WeightKind::Hahn: return "hahn";
  }
  return "unknown";
}

WeightSpec make_weight_spec(WeightKind kind, const RawWeightParams& raw, const Scalar& gamma) {
  WeightSpec spec{kind, Scalar(0), Scalar(0), Scalar(1), std::nullopt, gamma};
  const std::string name = kind_name(kind);
  auto need = [&](const char* field, const auto& opt) {
    if (!opt) bad(name + " weight requires parameter " + field);
  };
  auto pin = [&](const char* field, const std::optional<Scalar>& opt, const Scalar& pinned) {
    if (opt && *opt != pinned) {
      bad(name + " weight fixes " + field + " = " + to_string(pinned) +
          "; got " + to_string(*opt));
    }
  };
  auto no_lattice_length = [&] {
    if (raw.N) bad(name + " weight lives on an infinite lattice; N must be absent");
  };
  switch (kind) {
    case WeightKind::Charlier:
      need("b", raw.b);
      spec.b = *raw.b;
      pin("alpha", raw.alpha, Scalar(0));
      pin("beta", raw.beta, Scalar(0));
      no_lattice_length();
      break;
    case WeightKind::Meixner:
      need("alpha", raw.alpha);
      need("b", raw.b);
      spec.alpha = *raw.alpha;
      spec.b = *raw.b;
      pin("beta", raw.beta, Scalar(0));
      no_lattice_length();
      break;
    case WeightKind::Kravchuk:
      need("b", raw.b);
      need("N", raw.N);
      spec.b = *raw.b;
      spec.N = *raw.N;
      pin("alpha", raw.alpha, Scalar(0));
      pin("beta", raw.beta, Scalar(0));
      break;
    case WeightKind::Hahn:
      need("alpha", raw.alpha);
      need("beta", raw.beta);
      need("N", raw.N);
      spec.alpha = *raw.alpha;
      spec.beta = *raw.beta;
      spec.N = *raw.N;
      pin("b", raw.b, Scalar(1));
      break;
  }
  if (spec.N && *spec.N < 0) bad(name + " weight requires N >= 0, got " + std::to_string(*spec.N));
  return spec;
}

WeightSpec make_charlier(const Scalar& b, const Scalar& gamma) {
  RawWeightParams raw;
  raw.b = b;
  return make_weight_spec(WeightKind::Charlier, raw, gamma);
}

WeightSpec make_meixner(const Scalar& alpha, const Scalar& b, const Scalar& gamma) {
  RawWeightParams raw;
  raw.alpha = alpha;
  raw.b = b;
  return make_weight_spec(WeightKind::Meixner, raw, gamma);
}

WeightSpec make_kravchuk(const Scalar& b, int N, const Scalar& gamma) {
  RawWeightParams raw;
  raw.b = b;
  raw.N = N;
  return make_weight_spec(WeightKind::Kravchuk, raw, gamma);
}

WeightSpec make_hahn(const Scalar& alpha, const Scalar& beta, int N, const Scalar& gamma) {
  RawWeightParams raw;
  raw.alpha = alpha;
  raw.beta = beta;
  raw.N = N;
  return make_weight_spec(WeightKind::Hahn, raw, gamma);
}

WeightSpec shifted_spec(const WeightSpec& spec, int s) {
  if (s < 0) throw InvalidParameter("level shift must be nonnegative");
  WeightSpec out = spec;
  switch (spec.kind) {
    case WeightKind::Charlier:
      break;
    case WeightKind::Meixner:
      out.alpha = spec.alpha + s;
      break;
    case WeightKind::Kravchuk:
      if (*spec.N < s) throw InvalidParameter("level shift exceeds the kravchuk lattice length");
      out.N = *spec.N - s;
      break;
    case WeightKind::Hahn:
      if (*spec.N < s) throw InvalidParameter("level shift exceeds the hahn lattice length");
      out.alpha = spec.alpha + s;
      out.beta = spec.beta + s;
      out.N = *spec.N - s;
      break;
  }
  return out;
}

Scalar WeightSystem::B() const {
  Scalar prod(1);
  for (const auto& w : weights) prod *= w.b;
  return prod;
}

std::optional<int> WeightSystem::Ncap() const {
  std::optional<int> cap;
  for (const auto& w : weights) {
    if (w.N && (!cap || *w.N < *cap)) cap = *w.N;
  }
  return cap;
}

int WeightSystem::count(WeightKind kind) const {
  int c = 0;
  for (const auto& w : weights) {
    if (w.kind == kind) ++c;
  }
  return c;
}

std::optional<int> WeightSystem::support_size(int j) const {
  const auto& w = weights.at(j);
  if (!w.N) return std::nullopt;
  return *w.N + 1;
}

Interval WeightSystem::hull(int j) const {
  const auto& w = weights.at(j);
  if (!w.N) return Interval{w.gamma, std::nullopt};
  return Interval{w.gamma, w.gamma + Scalar(*w.N)};
}

WeightSystem WeightSystem::shifted(int s) const {
  WeightSystem out;
  out.weights.reserve(weights.size());
  for (const auto& w : weights) out.weights.push_back(shifted_spec(w, s));
  return out;
}

WeightSystem assemble_system(std::vector<WeightSpec> specs) {
  if (specs.empty()) throw InvalidParameter("a weight system needs at least one weight");
  const int r = static_cast<int>(specs.size());
  for (int j = 0; j < r; ++j) {
    for (int k = 0; k < r; ++k) {
      if (j == k) continue;
      const Scalar d = specs[j].gamma - specs[k].gamma;
      auto reject = [&](const char* expr, const Scalar& value) {
        throw IntegerShiftDifference(
            "weights " + std::to_string(j + 1) + " and " + std::to_string(k + 1) + ": " + expr +
            " = " + to_string(value) + " is an integer");
      };
      if (is_integer(d)) reject("gamma_j - gamma_k", d);
      if (is_integer(d - specs[j].alpha)) reject("gamma_j - gamma_k - alpha_j", d - specs[j].alpha);
      if (is_integer(d - specs[k].beta)) reject("gamma_j - gamma_k - beta_k", d - specs[k].beta);
    }
  }
  WeightSystem system;
  system.weights = std::move(specs);
  return system;
}

RatioUV ratio_uv(const WeightSpec& spec, int m) {
  const Scalar sm(m);
  switch (spec.kind) {
    case WeightKind::Charlier: {
      if (spec.b == 0) bad("charlier weight requires b != 0");
      return {Polynomial(Scalar(1)), linear(Scalar(0), Scalar(1) / spec.b)};
    }
    case WeightKind::Meixner: {
      if (spec.b == 0) bad("meixner weight requires b != 0");
      return {linear(spec.alpha + sm, Scalar(1)), linear(Scalar(0), Scalar(1) / spec.b)};
    }
    case WeightKind::Kravchuk: {
      if (spec.b == 0) bad("kravchuk weight requires b != 0");
      return {linear(Scalar(*spec.N) - sm, Scalar(-1)),
              linear(Scalar(0), Scalar(1) / spec.b)};
    }
    case WeightKind::Hahn: {
      const Scalar am = spec.alpha + sm;
      const Scalar bm = spec.beta + sm;
      if (am == 0 || bm == 0) {
        throw DegenerateHahn("hahn ratio undefined at level " + std::to_string(m) +
                             ": alpha+m = " + to_string(am) + ", beta+m = " + to_string(bm));
      }
      const Scalar c = Scalar(1) / (am * bm);
      const Scalar N(*spec.N);
      const Polynomial u = linear(am, Scalar(1)) * linear(N - sm, Scalar(-1)) * c;
      const Polynomial v = linear(Scalar(0), Scalar(1)) * linear(N + spec.beta, Scalar(-1)) * c;
      return {u, v};
    }
  }
  bad("unknown weight kind");
}

RationalFunction single_forward_ratio(const WeightSpec& spec) {
  const Polynomial xp1 = linear(Scalar(1), Scalar(1));
  switch (spec.kind) {
    case WeightKind::Charlier:
      return RationalFunction(Polynomial(spec.b), xp1);
    case WeightKind::Meixner:
      return RationalFunction(linear(spec.alpha, Scalar(1)) * spec.b, xp1);
    case WeightKind::Kravchuk:
      return RationalFunction(linear(Scalar(*spec.N), Scalar(-1)) * spec.b, xp1);
    case WeightKind::Hahn: {
      const Scalar N(*spec.N);
      return RationalFunction(linear(spec.alpha, Scalar(1)) * linear(N, Scalar(-1)),
                              xp1 * linear(N + spec.beta - 1, Scalar(-1)));
    }
  }
  bad("unknown weight kind");
}

RationalFunction forward_ratio(const WeightSystem& system) {
  RationalFunction f(Polynomial(Scalar(1)), Polynomial(Scalar(1)));
  for (const auto& w : system.weights) {
    f = f * single_forward_ratio(w).shift_arg(w.gamma);
  }
  // Poles of the reduced ratio can only sit at the structural denominator
  // roots: gamma_j - 1, and gamma_j + N_j + beta_j - 1 for Hahn factors.
  // Reject any that survive cancellation and land on a node whose ratio is
  // actually consumed (k in {0..N_i-1}, every k >= 0 when infinite).
  std::vector<Scalar> candidates;
  for (const auto& w : system.weights) {
    candidates.push_back(w.gamma - 1);
    if (w.kind == WeightKind::Hahn) {
      candidates.push_back(w.gamma + Scalar(*w.N) + w.beta - 1);
    }
  }
  for (const auto& c : candidates) {
    if (f.den()(c) != 0) continue;
    for (int i = 0; i < system.r(); ++i) {
      const Scalar k = c - system.weights[i].gamma;
      if (!is_nonnegative_integer(k)) continue;
      const auto& Ni = system.weights[i].N;
      if (Ni && k > Scalar(*Ni - 1)) continue;
      throw PoleOnLattice("forward ratio has a pole at x = " + to_string(c) +
                          " (node " + to_string(k) + " of lattice " + std::to_string(i + 1) + ")");
    }
  }
  return f;
}

RatioParts forward_ratio_parts(const WeightSystem& system) {
  // The factors are written out directly and never cancelled, even when a
  // numerator root collides with a denominator root (Meixner alpha = 1, or
  // parameter coincidences across lattices): the measure's analytic
  // structure lives in this factorization, not in the reduced quotient.
  // Denominator factors are kept monic; the Hahn numerator absorbs the
  // matching sign flip, so num/den still equals the forward ratio.
  Polynomial num(Scalar(1));
  Polynomial den(Scalar(1));
  for (const auto& w : system.weights) {
    const Scalar& g = w.gamma;
    den = den * linear(Scalar(1) - g, Scalar(1));  // y + 1
    switch (w.kind) {
      case WeightKind::Charlier:
        num = num * Polynomial(w.b);
        break;
      case WeightKind::Meixner:
        num = num * (linear(w.alpha - g, Scalar(1)) * w.b);  // b (y + alpha)
        break;
      case WeightKind::Kravchuk:
        num = num * (linear(Scalar(*w.N) + g, Scalar(-1)) * w.b);  // b (N - y)
        break;
      case WeightKind::Hahn: {
        const Scalar N(*w.N);
        // (y + alpha)(y - N) over (y + 1)(y - (N + beta - 1)): both the
        // numerator's (N - y) and the denominator's (N - y + beta - 1)
        // are negated to keep the denominator monic.
        num = num * linear(w.alpha - g, Scalar(1)) * linear(-N - g, Scalar(1));
        den = den * linear(Scalar(1) - N - w.beta - g, Scalar(1));
        break;
      }
    }
  }
  return {num, den};
}

LatticeMeasure relative_weights(const WeightSystem& system, int j, int count) {
  if (j < 0 || j >= system.r()) throw InvalidParameter("lattice index out of range");
  if (count < 1) throw InvalidParameter("relative weights need at least one node");
  const auto size = system.support_size(j);
  if (size && count > *size) {
    throw InvalidParameter("requested " + std::to_string(count) + " nodes on a lattice with " +
                           std::to_string(*size));
  }
  const RationalFunction f = forward_ratio(system);
  LatticeMeasure out;
  out.gamma = system.weights[j].gamma;
  out.size = size;
  out.values.reserve(count);
  out.values.push_back(Scalar(1));
  for (int k = 0; k + 1 < count; ++k) {
    const Scalar x = out.gamma + Scalar(k);
    if (!f.defined_at(x)) {
      throw PoleOnLattice("forward ratio undefined at node " + std::to_string(k) +
                          " of lattice " + std::to_string(j + 1));
    }
    out.values.push_back(out.values.back() * f(x));
  }
  out.sign_profile.reserve(count);
  for (const auto& v : out.values) out.sign_profile.push_back(sign_of(v));
  return out;
}

}  // namespace dmop
