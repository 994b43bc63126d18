#pragma once

#include <vector>

#include "dmop/polynomial.hpp"
#include "dmop/weights.hpp"

namespace dmop {

// Level-t product rows in the global variable x:
//   U_t(x) = prod_j u_t^{(j)}(x - gamma_j),  V_t(x) = prod_j v_t^{(j)}(x - gamma_j).
struct UVPair {
  Polynomial U;
  Polynomial V;
};

// Builds the level-t product pair. Throws DegenerateHahn via ratio_uv when a
// Hahn row's normalizing constant vanishes.
UVPair build_uv(const WeightSystem& system, int t);

struct DegreeTraceEntry {
  int step;                   // m, the recurrence step (0 = the seed constant)
  int expected;               // r * m
  std::optional<int> actual;  // degree observed; absent only for the zero polynomial
};

// The full transcript of one construction run.
struct RodriguesResult {
  int n = 0;
  Polynomial P;                           // the degree r*n output polynomial
  std::vector<Polynomial> intermediates;  // intermediates[m] after step m; [0] = 1
  std::vector<UVPair> levels;             // levels[t] for t = 0..n-1; step m uses t = n-m
  std::vector<DegreeTraceEntry> degree_trace;

  Polynomial monic() const { return P.monic(); }
};

// Unwinds the backward-difference product formula into the two-term
// recurrence
//   P_m(x) = U_{n-m}(x) P_{m-1}(x) - V_{n-m}(x) P_{m-1}(x-1),  P_0 = 1,
// for m = 1..n, recording every intermediate and its degree.
//
// Preconditions are the caller's: this routine does not validate the system
// (negative controls drive it with inadmissible parameters on purpose).
// Throws:
//   HorizonExceeded  if a finite lattice cannot supply n weight levels
//                    (n > min N_j),
//   DegreeCollapse   if some intermediate misses its expected degree r*m
//                    (step and observed degree are recorded on the error),
//   DegenerateHahn   via the ratio rows.
RodriguesResult rodrigues_construct(const WeightSystem& system, int n);

// Single-weight convenience: the classical chain for one spec.
RodriguesResult classical_construct(const WeightSpec& spec, int n);

}  // namespace dmop
