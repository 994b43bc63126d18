#include "dmop/validate.hpp"

#include "dmop/errors.hpp"

namespace dmop {

namespace {

// s is a nonpositive integer {0, -1, -2, ...}.
bool in_nonpositive_integers(const Scalar& s) { return is_integer(s) && s <= 0; }

std::string val(const char* name, const Scalar& v) {
  return std::string(name) + " = " + to_string(v);
}

}  // namespace

ValidationReport check_D1(const WeightSpec& spec) {
  ValidationReport rep;
  switch (spec.kind) {
    case WeightKind::Charlier:
      if (!(spec.b > 0)) rep.add("D1.Charlier.b", "charlier positivity requires b > 0", val("b", spec.b));
      break;
    case WeightKind::Meixner:
      if (!(spec.alpha > 0)) {
        rep.add("D1.Meixner.alpha", "meixner positivity requires alpha > 0", val("alpha", spec.alpha));
      }
      if (!(spec.b > 0 && spec.b < 1)) {
        rep.add("D1.Meixner.b", "meixner positivity requires 0 < b < 1", val("b", spec.b));
      }
      break;
    case WeightKind::Kravchuk:
      if (!(spec.b > 0)) rep.add("D1.Kravchuk.b", "kravchuk positivity requires b > 0", val("b", spec.b));
      break;
    case WeightKind::Hahn: {
      const Scalar bound = Scalar(1) - Scalar(*spec.N);
      const bool both_positive = spec.alpha > 0 && spec.beta > 0;
      const bool both_low = spec.alpha < bound && spec.beta < bound;
      if (!both_positive && !both_low) {
        rep.add("D1.Hahn.sign",
                "hahn positivity requires alpha,beta > 0 or alpha,beta < 1-N",
                val("alpha", spec.alpha) + ", " + val("beta", spec.beta) +
                    ", 1-N = " + to_string(bound));
      }
      break;
    }
  }
  return rep;
}

ValidationReport check_D2(const WeightSpec& spec) {
  ValidationReport rep;
  switch (spec.kind) {
    case WeightKind::Charlier:
      if (spec.b == 0) rep.add("D2.Charlier.b", "charlier regularity requires b != 0", val("b", spec.b));
      break;
    case WeightKind::Meixner:
      if (!(spec.b != 0 && abs(spec.b) < 1)) {
        rep.add("D2.Meixner.b", "meixner regularity requires 0 < |b| < 1", val("b", spec.b));
      }
      if (in_nonpositive_integers(spec.alpha)) {
        rep.add("D2.Meixner.alpha", "meixner regularity requires alpha outside {0,-1,-2,...}",
                val("alpha", spec.alpha));
      }
      break;
    case WeightKind::Kravchuk:
      if (spec.b == 0 || spec.b == -1) {
        rep.add("D2.Kravchuk.b", "kravchuk regularity requires b outside {0,-1}", val("b", spec.b));
      }
      break;
    case WeightKind::Hahn: {
      const Scalar lowest = Scalar(1) - Scalar(*spec.N);
      if (is_integer_in(spec.alpha, lowest, Scalar(0))) {
        rep.add("D2.Hahn.alpha", "hahn regularity requires alpha outside {0,-1,...,1-N}",
                val("alpha", spec.alpha));
      }
      if (is_integer_in(spec.beta, lowest, Scalar(0))) {
        rep.add("D2.Hahn.beta", "hahn regularity requires beta outside {0,-1,...,1-N}",
                val("beta", spec.beta));
      }
      const Scalar s = -spec.alpha - spec.beta;
      if (is_integer_in(s, Scalar(0), Scalar(2 * *spec.N - 2))) {
        rep.add("D2.Hahn.sum", "hahn regularity requires -alpha-beta outside {0,1,...,2N-2}",
                "-alpha-beta = " + to_string(s) + ", N = " + std::to_string(*spec.N));
      }
      break;
    }
  }
  return rep;
}

ValidationReport check_MD2(const WeightSystem& system, int n_max) {
  if (n_max < 0) throw InvalidParameter("construction horizon must be nonnegative");
  ValidationReport rep;
  const int r = system.r();
  const int r_charlier = system.count(WeightKind::Charlier);
  const int r_meixner = system.count(WeightKind::Meixner);
  const int r_kravchuk = system.count(WeightKind::Kravchuk);
  const int r_hahn = system.count(WeightKind::Hahn);
  const Scalar B = system.B();

  // (0) nonzero base product; Meixner shape parameters regular.
  if (B == 0) rep.add("MD2.0", "the product of the geometric bases must be nonzero", "B = 0");
  for (int j = 0; j < r; ++j) {
    const auto& w = system.weights[j];
    if (w.kind == WeightKind::Meixner && in_nonpositive_integers(w.alpha)) {
      rep.add("MD2.0",
              "meixner alpha of weight " + std::to_string(j + 1) + " must avoid {0,-1,-2,...}",
              val("alpha", w.alpha));
    }
  }

  // (1) purely infinite-lattice systems with a Meixner factor need |B| < 1.
  if (r_charlier == 0 && r_meixner > 0 && !(abs(B) < 1)) {
    rep.add("MD2.1", "a meixner-bearing system without charlier factors requires |B| < 1",
            val("B", B));
  }

  // (2) all-Kravchuk systems must avoid the alternating base product.
  if (r_kravchuk == r) {
    const Scalar forbidden = (r % 2 == 0) ? Scalar(1) : Scalar(-1);
    if (B == forbidden) {
      rep.add("MD2.2", "an all-kravchuk system requires B != (-1)^r",
              val("B", B) + ", r = " + std::to_string(r));
    }
  }

  // (3) a Hahn factor must be unique, paired only with Kravchuk factors,
  //     with the matched sign product and regular parameters.
  if (r_hahn > 0) {
    bool shape_ok = true;
    if (r_hahn != 1 || r_kravchuk != r - 1) {
      rep.add("MD2.3",
              "a hahn-bearing system must contain exactly one hahn weight and r-1 kravchuk weights",
              "r_hahn = " + std::to_string(r_hahn) + ", r_kravchuk = " + std::to_string(r_kravchuk) +
                  ", r = " + std::to_string(r));
      shape_ok = false;
    }
    const Scalar wanted = ((r - 1) % 2 == 0) ? Scalar(1) : Scalar(-1);
    if (B != wanted) {
      rep.add("MD2.3", "a hahn-bearing system requires B = (-1)^(r-1)",
              val("B", B) + ", r = " + std::to_string(r));
    }
    if (shape_ok) {
      const WeightSpec* hahn = nullptr;
      Scalar kravchuk_sum(0);
      for (const auto& w : system.weights) {
        if (w.kind == WeightKind::Hahn) hahn = &w;
        if (w.kind == WeightKind::Kravchuk) kravchuk_sum += Scalar(*w.N);
      }
      const Scalar lowest = Scalar(1) - Scalar(*hahn->N);
      if (is_integer_in(hahn->alpha, lowest, Scalar(0))) {
        rep.add("MD2.3", "hahn alpha must avoid {0,-1,...,1-N}", val("alpha", hahn->alpha));
      }
      if (is_integer_in(hahn->beta, lowest, Scalar(0))) {
        rep.add("MD2.3", "hahn beta must avoid {0,-1,...,1-N}", val("beta", hahn->beta));
      }
      // alpha+beta+r*n - sum_j N_j (Kravchuk factors) must avoid {0,...,-n}
      // for each n up to the horizon. Only integer values can collide, so
      // the loop runs only when alpha+beta is an integer.
      const Scalar base = hahn->alpha + hahn->beta - kravchuk_sum;
      if (is_integer(base)) {
        const auto cap = system.Ncap();
        int horizon = n_max;
        if (cap) horizon = std::min(horizon, *cap - 1);
        for (int n = 0; n <= horizon; ++n) {
          const Scalar s = base + Scalar(r) * Scalar(n);
          if (s <= 0 && s >= Scalar(-n)) {
            rep.add("MD2.3",
                    "alpha+beta+r*n - sum(N_j) hits {0,-1,...,-n} at n = " + std::to_string(n),
                    "value = " + to_string(s));
            break;
          }
        }
      }
    }
  }
  return rep;
}

CaseLabel classify_case(const WeightSystem& system) {
  if (system.r() != 2) {
    throw UnsupportedArity("support classification needs exactly two weights, got " +
                           std::to_string(system.r()));
  }
  CaseLabel label;
  label.hull1 = system.hull(0);
  label.hull2 = system.hull(1);
  const auto& h1 = label.hull1;
  const auto& h2 = label.hull2;
  const bool overlap = (!h1.hi || h2.lo <= *h1.hi) && (!h2.hi || h1.lo <= *h2.hi);
  label.disjoint = !overlap;
  return label;
}

}  // namespace dmop
