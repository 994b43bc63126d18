// Acceptance gate: one line per criterion, PASS/FAIL, with wall time.
// Every tolerance and budget is pinned here, in code, not in flags.
// Exit code 0 only when every criterion passes.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dmop/bigfloat.hpp"
#include "dmop/errors.hpp"
#include "dmop/presets.hpp"
#include "dmop/rodrigues.hpp"
#include "dmop/validate.hpp"
#include "dmop/verify.hpp"
#include "dmop/weights.hpp"
#include "dmop/zeros.hpp"

using namespace dmop;

namespace {

// ---- pinned tolerances and budgets ----------------------------------------
const Scalar kOrthTol = Scalar(1) / pow_int(Scalar(10), 30);   // certified orthogonality
const Scalar kZeroRealTol = Scalar(1) / pow_int(Scalar(10), 10);  // |Im| for a real zero
const Scalar kZeroAgreeTol = Scalar(1) / pow_int(Scalar(10), 12); // precision ladder agreement
const char* kZeroSepTol = "1e-6";    // minimum pairwise zero distance
constexpr double kBudgetDegree = 10.0;        // seconds, criterion 1
constexpr double kBudgetExactOrth = 30.0;     // seconds, criterion 2
constexpr double kBudgetBoundedOrth = 60.0;   // seconds, criterion 3
constexpr double kBudgetZeros = 120.0;        // seconds, criterion 5
// The moment-oracle relative tolerance (1e-20) is pinned inside the library;
// criterion 4 asserts through its pass verdict.

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void req(bool ok, const std::string& msg) {
  if (!ok) throw Failure(msg);
}

WeightSystem preset_system(Family f) {
  FamilyCheck fc = check_family(f, {});
  req(fc.report.pass && fc.system.has_value(), "preset defaults failed validation");
  return *fc.system;
}

int preset_horizon(const WeightSystem& sys, int wanted) {
  if (auto cap = sys.Ncap()) return std::min(wanted, *cap);
  return wanted;
}

// ---- criterion bodies ------------------------------------------------------

void crit_degree_law() {
  for (const auto& fi : family_catalog()) {
    WeightSystem sys = preset_system(fi.family);
    const int hi = preset_horizon(sys, 10);
    for (int n = 0; n <= hi; ++n) {
      RodriguesResult res = rodrigues_construct(sys, n);
      req(res.P.degree() == sys.r() * n, fi.name + ": wrong degree at n=" + std::to_string(n));
      for (const auto& e : res.degree_trace) {
        req(e.actual && *e.actual == e.expected,
            fi.name + ": degree trace broken at step " + std::to_string(e.step));
      }
    }
  }
}

void crit_exact_orthogonality() {
  for (Family f : {Family::KravchukKravchuk, Family::KravchukHahn1, Family::AngelescoKravchuk,
                   Family::KravchukHahn2}) {
    WeightSystem sys = preset_system(f);
    const std::string name = family_info(f).name;
    for (int n = 1; n <= 10; ++n) {
      Polynomial P = rodrigues_construct(sys, n).P;
      OrthogonalityReport rep = orthogonality_residuals(sys, P, n, kOrthTol);
      req(rep.pass, name + ": orthogonality failed at n=" + std::to_string(n));
      for (const auto& e : rep.entries) {
        req(e.exact && e.residual == 0,
            name + ": nonzero exact residual at n=" + std::to_string(n) + " lattice " +
                std::to_string(e.lattice) + " power " + std::to_string(e.power));
      }
    }
  }
}

void crit_bounded_orthogonality() {
  auto check = [](Family f, int n_hi) {
    WeightSystem sys = preset_system(f);
    const std::string name = family_info(f).name;
    for (int n = 1; n <= n_hi; ++n) {
      Polynomial P = rodrigues_construct(sys, n).P;
      OrthogonalityReport rep = orthogonality_residuals(sys, P, n, kOrthTol);
      req(rep.pass, name + ": bounded orthogonality failed at n=" + std::to_string(n));
      for (const auto& e : rep.entries) {
        if (e.exact) {
          req(e.residual == 0, name + ": exact lattice residual nonzero");
        } else {
          Scalar mag = e.residual < 0 ? Scalar(-e.residual) : e.residual;
          req(Scalar(mag + e.tail_bound) <= kOrthTol,
              name + ": certified bound exceeds tolerance at n=" + std::to_string(n));
        }
      }
    }
  };
  check(Family::CharlierCharlier, 8);
  check(Family::CharlierMeixner, 8);
  check(Family::MeixnerSorokin, 8);
  check(Family::CharlierKravchuk, 6);   // mixed finite/infinite lattices
  check(Family::MeixnerKravchuk, 6);
}

void crit_moment_oracle() {
  for (const auto& fi : family_catalog()) {
    WeightSystem sys = preset_system(fi.family);
    const bool disjoint = classify_case(sys).disjoint;
    const int hi = preset_horizon(sys, 6);
    for (int n = 1; n <= hi; ++n) {
      Polynomial P = rodrigues_construct(sys, n).P;
      OracleComparison cmp = compare_with_moment_oracle(sys, P, n, kOrthTol, disjoint);
      req(cmp.pass, fi.name + ": oracle mismatch at n=" + std::to_string(n) + " (" + cmp.detail +
                        ")");
      if (!cmp.truncated) {
        req(cmp.nullity >= 1, fi.name + ": oracle found no annihilated direction");
        if (disjoint) {
          req(cmp.nullity == 1, fi.name + ": disjoint case must determine the polynomial "
                                          "uniquely, nullity = " + std::to_string(cmp.nullity));
        }
      }
    }
  }
}

void crit_zero_structure() {
  PrecisionGuard guard(256);
  const BigFloat sep(kZeroSepTol);
  for (Family f : {Family::AngelescoKravchuk, Family::KravchukHahn2}) {
    WeightSystem sys = preset_system(f);
    const std::string name = family_info(f).name;
    for (int n = 1; n <= 20; ++n) {
      Polynomial P = rodrigues_construct(sys, n).P;
      auto zs = find_zeros_adaptive(P, 256, 4096, kZeroAgreeTol);
      ZeroReport rep = zero_report(zs, sys, kZeroRealTol);
      const std::string at = name + " n=" + std::to_string(n);
      req(rep.complex_count == 0, at + ": nonreal zero found");
      req(rep.real_count == 2 * n, at + ": expected " + std::to_string(2 * n) + " real zeros");
      req(rep.per_hull.size() == 2 && rep.per_hull[0] == n && rep.per_hull[1] == n,
          at + ": zeros not split n per lattice hull");
      req(rep.min_pair_distance > sep, at + ": zeros closer than the pinned separation");
    }
  }
}

void crit_pearson() {
  // Preset defaults plus admissible jitters of each family's parameters.
  std::vector<std::pair<Family, ParamMap>> cases;
  for (const auto& fi : family_catalog()) cases.emplace_back(fi.family, ParamMap{});
  cases.emplace_back(Family::CharlierCharlier, ParamMap{{"b", Scalar(7) / 2}});
  cases.emplace_back(Family::CharlierCharlier,
                     ParamMap{{"gamma2", Scalar(1) / 3}, {"b", Scalar(1) / 5}});
  cases.emplace_back(Family::CharlierMeixner, ParamMap{{"alpha", Scalar(2) / 7}});
  cases.emplace_back(Family::MeixnerSorokin,
                     ParamMap{{"b", Scalar(2) / 3}, {"alpha1", Scalar(5) / 4}});
  cases.emplace_back(Family::KravchukKravchuk, ParamMap{{"b", Scalar(1) / 3}, {"N1", Scalar(9)},
                                                        {"N2", Scalar(9)}});
  cases.emplace_back(Family::KravchukHahn1, ParamMap{{"beta", Scalar(-95) / 3}});
  cases.emplace_back(Family::CharlierKravchuk, ParamMap{{"b", Scalar(3)}});
  cases.emplace_back(Family::MeixnerKravchuk, ParamMap{{"alpha", Scalar(3) / 4}});
  cases.emplace_back(Family::AngelescoKravchuk, ParamMap{{"b", Scalar(1) / 2}});
  cases.emplace_back(Family::KravchukHahn2, ParamMap{{"alpha", Scalar(43) / 2}});

  for (const auto& [f, params] : cases) {
    const std::string name = family_info(f).name;
    FamilyCheck fc = check_family(f, params);
    req(fc.report.pass && fc.system.has_value(), name + ": jittered parameters inadmissible");
    PearsonPair pair = derive_pearson(*fc.system);
    req(pair.sigma.degree().value_or(-1) <= fc.system->r() + 1,
        name + ": sigma degree above r+1");
    req(pair.tau.degree() == fc.system->r(), name + ": tau degree != r");
    PearsonCheckReport rep = check_pearson(*fc.system);
    req(rep.pass && rep.identity_ok && rep.nodes_ok && rep.degrees_ok,
        name + ": difference-equation pair failed its checks");
  }
}

void crit_negative_controls() {
  // (a) all-kravchuk with B = 1: flagged by validation, and the raw
  //     construction collapses at step 1.
  FamilyCheck kk = check_family(Family::KravchukKravchuk, {{"b", Scalar(1)}});
  req(!kk.report.pass, "KK b=1 must fail validation");
  bool md22 = false;
  for (const auto& v : kk.report.violations) md22 |= v.clause == "MD2.2";
  req(md22, "KK b=1 must cite MD2.2");
  WeightSystem bad = assemble_system(
      {make_kravchuk(Scalar(1), 20, Scalar(0)), make_kravchuk(Scalar(1), 20, Scalar(1) / 2)});
  try {
    rodrigues_construct(bad, 1);
    req(false, "B=1 kravchuk pair must collapse");
  } catch (const DegreeCollapse& e) {
    req(e.step == 1 && e.observed.has_value(), "collapse must report step and observed degree");
  }

  // (b) integer lattice shifts are structurally impossible.
  try {
    assemble_system({make_charlier(Scalar(1), Scalar(0)), make_charlier(Scalar(1), Scalar(3))});
    req(false, "integer shift difference must be rejected");
  } catch (const IntegerShiftDifference&) {
  }

  // (c) hahn regularity: -alpha-beta inside {0,...,2N-2}.
  ValidationReport hahn = check_D2(make_hahn(Scalar(1), Scalar(-4), 4, Scalar(0)));
  bool sum = false;
  for (const auto& v : hahn.violations) sum |= v.clause == "D2.Hahn.sum";
  req(!hahn.pass && sum, "hahn alpha=1, beta=-4, N=4 must fail D2.Hahn.sum");

  // (d) the hahn-bearing horizon scan fires exactly when the order window
  //     reaches the first collision.
  WeightSystem kh = assemble_system({make_kravchuk(Scalar(-1), 20, Scalar(-1) / 3),
                                     make_hahn(Scalar(1), Scalar(-30), 20, Scalar(0))});
  req(check_MD2(kh, 16).pass, "horizon 16 must still be clean");
  req(!check_MD2(kh, 17).pass, "horizon 17 must trip the order-window clause");

  // (e) no geometric tail certificate at b = 1.
  WeightSystem flat = assemble_system({make_meixner(Scalar(1), Scalar(1), Scalar(0))});
  try {
    certified_sum(flat, 0, Polynomial(Scalar(1)), kOrthTol);
    req(false, "flat meixner tail must be rejected");
  } catch (const TailNotContracting&) {
  }

  // (f) construction past the shortest lattice.
  try {
    rodrigues_construct(preset_system(Family::KravchukKravchuk), 21);
    req(false, "order past the lattice cap must be rejected");
  } catch (const HorizonExceeded&) {
  }
}

void crit_properties() {
  // (i) two-term leading-coefficient lemma, 1000 seeded draws.
  {
    std::mt19937 gen(20250819);
    auto draw_int = [&](int lo, int hi) {
      return std::uniform_int_distribution<int>(lo, hi)(gen);
    };
    auto draw_scalar = [&]() { return Scalar(draw_int(-9, 9)) / draw_int(1, 9); };
    int checked = 0;
    for (int it = 0; it < 1000; ++it) {
      Scalar a = draw_scalar();
      if (a == 0) continue;
      Scalar b1 = draw_scalar(), b2 = draw_scalar();
      int m = draw_int(0, 6);
      Scalar expect = Scalar(b1 - b2 + a * m);
      if (expect == 0) continue;
      std::vector<Scalar> qc(static_cast<size_t>(m) + 1);
      for (int k = 0; k < m; ++k) qc[static_cast<size_t>(k)] = draw_scalar();
      qc[static_cast<size_t>(m)] = 1;
      Polynomial Q(qc);
      Polynomial T = Polynomial(std::vector<Scalar>{b1, a}) * Q - Polynomial(std::vector<Scalar>{b2, a}) * Q.shift_arg(Scalar(1));
      req(T.degree() == m && T.leading() == expect, "leading-coefficient lemma violated");
      ++checked;
    }
    req(checked > 850, "lemma property: too few effective draws");
  }

  // (ii) translation equivariance.
  for (Family f : {Family::CharlierCharlier, Family::KravchukKravchuk, Family::KravchukHahn2}) {
    WeightSystem sys = preset_system(f);
    const Scalar t = Scalar(3) / 7;
    std::vector<WeightSpec> moved = sys.weights;
    for (auto& w : moved) w.gamma += t;
    WeightSystem shifted = assemble_system(std::move(moved));
    for (int n = 1; n <= 3; ++n) {
      req(rodrigues_construct(shifted, n).P == rodrigues_construct(sys, n).P.shift_arg(t),
          family_info(f).name + ": translation equivariance failed");
    }
  }

  // (iii) b-rebalancing: only the product of the geometric bases matters.
  {
    WeightSystem s1 = assemble_system(
        {make_charlier(Scalar(2), Scalar(0)), make_charlier(Scalar(3), Scalar(1) / 2)});
    WeightSystem s2 = assemble_system(
        {make_charlier(Scalar(6), Scalar(0)), make_charlier(Scalar(1), Scalar(1) / 2)});
    WeightSystem k1 = assemble_system(
        {make_kravchuk(Scalar(4), 20, Scalar(0)), make_kravchuk(Scalar(1) / 2, 20, Scalar(1) / 2)});
    WeightSystem k2 = assemble_system(
        {make_kravchuk(Scalar(2), 20, Scalar(0)), make_kravchuk(Scalar(1), 20, Scalar(1) / 2)});
    for (int n = 1; n <= 4; ++n) {
      req(rodrigues_construct(s1, n).P == rodrigues_construct(s2, n).P,
          "charlier b-rebalancing failed");
      req(rodrigues_construct(k1, n).P == rodrigues_construct(k2, n).P,
          "kravchuk b-rebalancing failed");
    }
  }

  // (iv) conjugate closure of a nonreal spectrum.
  {
    PrecisionGuard guard(256);
    Polynomial p = Polynomial(std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(1)}) *
                   Polynomial(std::vector<Scalar>{Scalar(5), Scalar(-2), Scalar(1)}) *
                   Polynomial(std::vector<Scalar>{Scalar(-3), Scalar(1)});
    WeightSystem single = assemble_system({make_charlier(Scalar(1), Scalar(0))});
    ZeroReport rep = zero_report(find_zeros(p, 256), single, kZeroRealTol);
    req(rep.conjugates_ok && rep.complex_count == 4 && rep.real_count == 1,
        "conjugate closure broken");
  }

  // (v) ladder node identities across levels (scale-free in the ladder
  //     normalization): U_s(g+k) w_s(k) = U_s(g) w_{s+1}(k) and the shifted
  //     V_s twin.
  for (Family f : {Family::CharlierCharlier, Family::KravchukKravchuk, Family::KravchukHahn2}) {
    WeightSystem sys = preset_system(f);
    for (int s = 0; s <= 2; ++s) {
      WeightSystem lo = sys.shifted(s);
      WeightSystem hi = sys.shifted(s + 1);
      UVPair uv = build_uv(sys, s);
      for (int j = 0; j < sys.r(); ++j) {
        int count = 6;
        if (auto sz = hi.support_size(j)) count = std::min(count, *sz);
        LatticeMeasure wlo = relative_weights(lo, j, count);
        LatticeMeasure whi = relative_weights(hi, j, count);
        Scalar g = sys.weights[static_cast<size_t>(j)].gamma;
        req(uv.V(g) == 0, "V must vanish at the lattice base");
        Scalar u0 = uv.U(g);
        req(u0 != 0, "normalization bridge vanished");
        for (int k = 0; k < count; ++k) {
          Scalar node = Scalar(g + k);
          req(Scalar(uv.U(node) * wlo.values[static_cast<size_t>(k)]) ==
                  Scalar(u0 * whi.values[static_cast<size_t>(k)]),
              "forward ladder node identity failed");
          Scalar rhs =
              k == 0 ? Scalar(0) : Scalar(u0 * whi.values[static_cast<size_t>(k) - 1]);
          req(Scalar(uv.V(node) * wlo.values[static_cast<size_t>(k)]) == rhs,
              "backward ladder node identity failed");
        }
      }
    }
  }
}

// ---- driver ----------------------------------------------------------------

struct Criterion {
  const char* id;
  const char* desc;
  double budget_s;  // 0 = no budget
  std::function<void()> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"C1", "degree law: deg P_n = r*n for all presets, n <= min(10, lattice cap)",
       kBudgetDegree, crit_degree_law},
      {"C2", "exact orthogonality: finite-lattice residuals identically zero, n <= 10",
       kBudgetExactOrth, crit_exact_orthogonality},
      {"C3", "bounded orthogonality: |partial| + tail <= 1e-30 on infinite lattices, n <= 8",
       kBudgetBoundedOrth, crit_bounded_orthogonality},
      {"C4", "independent moment oracle agrees for every preset, n <= 6 (rel 1e-20, "
             "disjoint cases unique)",
       0.0, crit_moment_oracle},
      {"C5", "zero structure on disjoint lattices: 2n simple real zeros, n per hull, n <= 20",
       kBudgetZeros, crit_zero_structure},
      {"C6", "difference-equation pair: deg sigma <= r+1, deg tau = r, identity and node checks",
       0.0, crit_pearson},
      {"C7", "negative controls: collapse, integer shifts, regularity traps, tail refusal",
       0.0, crit_negative_controls},
      {"C8", "properties: leading-coefficient lemma x1000, equivariance, rebalancing, "
             "conjugates, ladder identities",
       0.0, crit_properties},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string failure;
    try {
      c.body();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (failure.empty() && c.budget_s > 0 && secs > c.budget_s) {
      std::ostringstream ss;
      ss << "exceeded " << c.budget_s << "s budget";
      failure = ss.str();
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (failure.empty() ? "PASS " : "FAIL ") << c.id << " " << c.desc << " [" << secs
         << "s";
    if (c.budget_s > 0) line << " / " << c.budget_s << "s";
    line << "]";
    if (!failure.empty()) line << " -- " << failure;
    std::cout << line.str() << std::endl;
    if (!failure.empty()) all_ok = false;
  }
  return all_ok ? 0 : 1;
}
