#pragma once

#include <string>
#include <vector>

#include "dmop/weights.hpp"

namespace dmop {

// One failed admissibility clause: a stable machine-readable identifier
// (e.g. "MD2.2", "D2.Hahn.sum", "KHI.c"), a human-readable description, and
// the offending values rendered as exact rationals.
struct Violation {
  std::string clause;
  std::string text;
  std::string values;
};

struct ValidationReport {
  bool pass = true;
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // informational, e.g. which alternative matched

  void add(std::string clause, std::string text, std::string values = {}) {
    pass = false;
    violations.push_back({std::move(clause), std::move(text), std::move(values)});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
  void merge(const ValidationReport& other) {
    pass = pass && other.pass;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

// Positivity conditions of the single weight:
//   Charlier b>0; Meixner alpha>0 and 0<b<1; Kravchuk b>0;
//   Hahn (alpha>0 and beta>0) or (alpha<1-N and beta<1-N).
ValidationReport check_D1(const WeightSpec& spec);

// Regularity (degree-preservation) conditions of the single weight:
//   Charlier b!=0; Meixner 0<|b|<1 and alpha not a nonpositive integer;
//   Kravchuk b not in {0,-1}; Hahn alpha,beta not in {0,-1,...,1-N} and
//   -alpha-beta not in {0,1,...,2N-2}.
ValidationReport check_D2(const WeightSpec& spec);

// System-level regularity guaranteeing deg P_n = r*n for n up to the
// caller's construction horizon n_max. Checks, in order:
//   (0) B != 0, and every Meixner alpha avoids the nonpositive integers;
//   (1) if there is no Charlier weight but some Meixner weight: |B| < 1;
//   (2) if all weights are Kravchuk: B != (-1)^r;
//   (3) if a Hahn weight is present: exactly one, all others Kravchuk,
//       B = (-1)^(r-1), the Hahn alpha,beta avoid {0,-1,...,1-N_H}, and
//       alpha+beta+r*n - sum of the Kravchuk N_j avoids {0,-1,...,-n} for
//       every n in {0,...,min(n_max, Ncap-1)}.
ValidationReport check_MD2(const WeightSystem& system, int n_max);

// Support-hull classification for two-weight systems.
struct CaseLabel {
  bool disjoint = false;  // true when the hulls share no point
  Interval hull1;
  Interval hull2;
};
// Throws UnsupportedArity unless r == 2.
CaseLabel classify_case(const WeightSystem& system);

}  // namespace dmop
