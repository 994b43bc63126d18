#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmop/polynomial.hpp"
#include "dmop/rational_function.hpp"

namespace dmop {

// The four discrete weight families on a shifted lattice gamma + {0,1,...}.
// In the weight's own variable y = x - gamma:
//   Charlier  rho(y) = b^y / Gamma(y+1)                                (infinite lattice)
//   Meixner   rho(y) = b^y Gamma(y+alpha) / Gamma(y+1)                 (infinite lattice)
//   Kravchuk  rho(y) = b^y / (Gamma(y+1) Gamma(N+1-y))                 (lattice {0..N})
//   Hahn      rho(y) = Gamma(y+alpha) Gamma(N-y+beta) / (Gamma(y+1) Gamma(N+1-y))
enum class WeightKind { Charlier, Meixner, Kravchuk, Hahn };

std::string kind_name(WeightKind kind);

// One weight on one shifted lattice. Fields that a family does not use are
// pinned to fixed values (alpha=0, beta=0, b=1, N absent) by the
// constructors below, so every WeightSpec is directly comparable.
struct WeightSpec {
  WeightKind kind;
  Scalar alpha;         // Meixner/Hahn only, otherwise 0
  Scalar beta;          // Hahn only, otherwise 0
  Scalar b;             // geometric base; fixed to 1 for Hahn
  std::optional<int> N; // lattice length parameter; nullopt = infinite lattice
  Scalar gamma;         // lattice shift

  bool operator==(const WeightSpec&) const = default;
};

// Optional raw parameters as a caller hands them in (e.g. from a config
// file) before the per-family fixing rules are applied.
struct RawWeightParams {
  std::optional<Scalar> alpha;
  std::optional<Scalar> beta;
  std::optional<Scalar> b;
  std::optional<int> N;
};

// Applies the per-family parameter rules. Missing required parameters, a
// negative N, or a supplied value that the rules pin to something else all
// throw InvalidParameter.
WeightSpec make_weight_spec(WeightKind kind, const RawWeightParams& raw, const Scalar& gamma);

WeightSpec make_charlier(const Scalar& b, const Scalar& gamma);
WeightSpec make_meixner(const Scalar& alpha, const Scalar& b, const Scalar& gamma);
WeightSpec make_kravchuk(const Scalar& b, int N, const Scalar& gamma);
WeightSpec make_hahn(const Scalar& alpha, const Scalar& beta, int N, const Scalar& gamma);

// The level-s weight of the ladder behind the finite-difference product
// construction: Charlier unchanged; Meixner alpha+s; Kravchuk N-s;
// Hahn (alpha+s, beta+s, N-s). Throws InvalidParameter when s exceeds a
// finite lattice length.
WeightSpec shifted_spec(const WeightSpec& spec, int s);

// Closed interval [lo, hi], or the ray [lo, +inf) when hi is absent.
struct Interval {
  Scalar lo;
  std::optional<Scalar> hi;
  bool contains(const Scalar& x) const {
    return x >= lo && (!hi || x <= *hi);
  }
};

// An ordered system of weights, one lattice each. The struct itself is an
// open aggregate (tests construct degenerate systems on purpose);
// assemble_system is the checked entry point.
struct WeightSystem {
  std::vector<WeightSpec> weights;

  int r() const { return static_cast<int>(weights.size()); }
  Scalar B() const;                  // product of the geometric bases b_j
  std::optional<int> Ncap() const;   // min over finite N_j; absent if none finite
  int count(WeightKind kind) const;
  // Number of lattice nodes (N_j + 1), absent for an infinite lattice.
  std::optional<int> support_size(int j) const;
  // Convex hull of lattice j: [gamma_j, gamma_j + N_j] or [gamma_j, inf).
  Interval hull(int j) const;
  WeightSystem shifted(int s) const;
};

// Checked assembly: r >= 1, and for every pair j != k the differences
// gamma_j - gamma_k, gamma_j - gamma_k - alpha_j, gamma_j - gamma_k - beta_k
// must be nonintegers (they control whether the lattices interleave instead
// of colliding). Throws IntegerShiftDifference naming the offending pair.
WeightSystem assemble_system(std::vector<WeightSpec> specs);

// One row of the per-level ratio table, in the weight's own variable
// y = x - gamma:
//   u_m(y) = rho_{m+1}(y) / rho_m(y),   v_m(y) = rho_{m+1}(y-1) / rho_m(y),
// where rho_m is the level-m weight of the ladder:
//   Charlier  u = 1,                 v = y/b
//   Meixner   u = y+alpha+m,         v = y/b
//   Kravchuk  u = N-m-y,             v = y/b
//   Hahn      u = (y+alpha+m)(N-m-y)/((alpha+m)(beta+m)),
//             v = y(N-y+beta)/((alpha+m)(beta+m))
// Throws DegenerateHahn when alpha+m or beta+m vanishes.
struct RatioUV {
  Polynomial u;
  Polynomial v;
};
RatioUV ratio_uv(const WeightSpec& spec, int m);

// rho(y+1)/rho(y) for a single weight, in its own variable:
//   Charlier b/(y+1); Meixner b(y+alpha)/(y+1); Kravchuk b(N-y)/(y+1);
//   Hahn (y+alpha)(N-y)/((y+1)(N-y+beta-1)).
RationalFunction single_forward_ratio(const WeightSpec& spec);

// Product of the single ratios in the global variable x (each composed with
// y = x - gamma_j), in lowest terms. Throws PoleOnLattice when the reduced
// denominator vanishes at a node x = gamma_j + k with k inside lattice j's
// ratio range {0, ..., N_j - 1} (all k >= 0 for infinite lattices).
RationalFunction forward_ratio(const WeightSystem& system);

// The same product kept factored exactly as written (no cancellation, with
// the b constants in the numerator). The denominator's structure is what
// the Pearson pair is read from.
struct RatioParts {
  Polynomial num;
  Polynomial den;
};
RatioParts forward_ratio_parts(const WeightSystem& system);

// Relative weights along lattice j: values[k] = R(gamma_j + k) / R(gamma_j)
// where R is the product weight, generated by values[k+1] = values[k] *
// F(gamma_j + k) with F the system forward ratio.
struct LatticeMeasure {
  Scalar gamma;
  std::optional<int> size;       // node count of the lattice, absent if infinite
  std::vector<Scalar> values;    // values[0] == 1
  std::vector<int> sign_profile; // sign(values[k]) in {-1, 0, +1}
};
// count = number of nodes to generate; must not exceed a finite lattice's
// node count. Throws PoleOnLattice if F is undefined at a visited node.
LatticeMeasure relative_weights(const WeightSystem& system, int j, int count);

}  // namespace dmop
