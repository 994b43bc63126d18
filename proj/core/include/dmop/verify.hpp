#pragma once

#include <string>
#include <vector>

#include "dmop/bigfloat.hpp"
#include "dmop/polynomial.hpp"
#include "dmop/weights.hpp"

namespace dmop {

// ---------------------------------------------------------------------------
// Lattice sums
// ---------------------------------------------------------------------------

// Sum of Q over all nodes of finite lattice j, taken against the relative
// weights (w_0 = 1). Exact. Throws InvalidParameter for an infinite lattice.
Scalar exact_sum(const WeightSystem& system, int j, const Polynomial& Q);

// A truncated sum over infinite lattice j with a certified geometric tail:
// beyond index kstar every consecutive term ratio is provably <= theta < 1,
// so the absolute truncation error is <= |t_K| * theta / (1 - theta).
// Summation stops once that bound is <= tol / 2. All fields exact rationals.
struct TruncatedSum {
  Scalar value;       // partial sum actually accumulated
  Scalar tail_bound;  // certified bound on |true sum - value|
  Scalar theta;       // certified contraction ratio
  int kstar = 0;      // first index with the ratio certificate
  int terms = 0;      // number of terms accumulated
};

// Throws TailNotContracting when the limiting term ratio is >= 1 (no
// geometric certificate exists) and NoConvergence when the term budget runs
// out before the bound shrinks under tol / 2.
TruncatedSum certified_sum(const WeightSystem& system, int j, const Polynomial& Q,
                           const Scalar& tol);

// ---------------------------------------------------------------------------
// Orthogonality
// ---------------------------------------------------------------------------

// One tested condition: sum over lattice j of P(x) x^power dmu_j.
struct OrthogonalityEntry {
  int lattice = 0;
  int power = 0;
  bool exact = true;  // finite lattice: the sum is exact and must be 0
  Scalar residual;    // the sum (exact) or the certified partial sum
  Scalar tail_bound;  // 0 when exact
  int terms = 0;      // nodes consumed
  bool pass = false;  // exact: residual == 0; truncated: |residual| + tail <= tol
};

struct OrthogonalityReport {
  bool pass = false;
  Scalar tol;
  std::vector<OrthogonalityEntry> entries;
};

// Tests every diagonal orthogonality condition of order n: for each lattice
// j and each power 0 <= k < n, the sum of P(x) x^k against the lattice's
// relative weights. Finite lattices are summed exactly and must vanish;
// infinite lattices use certified truncation and must satisfy
// |partial| + tail <= tol.
OrthogonalityReport orthogonality_residuals(const WeightSystem& system, const Polynomial& P,
                                            int n, const Scalar& tol);

// ---------------------------------------------------------------------------
// Independent moment oracle
// ---------------------------------------------------------------------------

// The linear system the orthogonality conditions impose on the coefficients
// of an unknown degree-(r*n) polynomial: one row per (lattice j, power k<n),
// one column per monomial coefficient c_i, entry = power sum of x^{k+i} over
// lattice j. r*n rows, r*n+1 columns.
struct MomentSystem {
  std::vector<std::vector<Scalar>> matrix;
  bool truncated = false;  // true when any lattice needed certified truncation
  Scalar entry_tail_bound; // max tail bound over all entries (0 when exact)
};

MomentSystem moment_matrix(const WeightSystem& system, int n, const Scalar& tol);

// Reduced row echelon form in place; returns the rank. Exact.
int rref(std::vector<std::vector<Scalar>>& m);

// Nullspace basis of an r x c matrix (vectors of length c). Exact.
std::vector<std::vector<Scalar>> nullspace(std::vector<std::vector<Scalar>> m);

// Rebuilds the polynomial from the moment system alone and compares with P.
//
// Exact path (all lattices finite): computes the nullspace; passes when
// M * coeffs(P) == 0, the nullity is >= 1, and -- when expect_unique -- the
// nullity is exactly 1.
//
// Truncated path: pins the leading coefficient to 1, solves the remaining
// square system exactly, and compares against monic(P) coefficient by
// coefficient; passes when the largest relative deviation is < 1e-20.
// Throws SingularConstruction when that square system is singular.
struct OracleComparison {
  bool truncated = false;
  int nullity = -1;      // exact path only
  bool pass = false;
  BigFloat rel_error;    // truncated path: max relative coefficient deviation
  std::string detail;
};

OracleComparison compare_with_moment_oracle(const WeightSystem& system, const Polynomial& P,
                                            int n, const Scalar& tol, bool expect_unique);

// ---------------------------------------------------------------------------
// Pearson pair
// ---------------------------------------------------------------------------

// sigma(x) = structural denominator at x-1 (monic; vanishes at every lattice
// left endpoint), tau(x) = structural numerator - sigma. For an admissible
// system deg sigma <= r+1 and deg tau == r; anything else throws
// DegreeBoundViolated.
struct PearsonPair {
  Polynomial sigma;
  Polynomial tau;
};

PearsonPair derive_pearson(const WeightSystem& system);

struct PearsonCheckReport {
  bool identity_ok = false;  // sigma(x+1) num(x) == (sigma+tau)(x) den(x), reduced ratio
  bool nodes_ok = false;     // difference identity against actual weight values
  bool degrees_ok = false;
  bool pass = false;
};

// Checks the derived pair against the reduced forward ratio as a polynomial
// identity, and against actual relative-weight values via
//   sigma(x+1) w(x+1) - sigma(x) w(x) == tau(x) w(x)
// at the first `nodes_per_lattice` nodes of every lattice.
PearsonCheckReport check_pearson(const WeightSystem& system, int nodes_per_lattice = 8);

}  // namespace dmop
