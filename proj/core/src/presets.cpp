#include "dmop/presets.hpp"

#include <algorithm>
#include <functional>

#include "dmop/errors.hpp"

namespace dmop {

namespace {

Scalar rat(long num, long den = 1) { return Scalar(num) / Scalar(den); }

const Scalar& P(const ParamMap& m, const char* key) { return m.at(key); }

int PI(const ParamMap& m, const char* key) {
  const Scalar& v = m.at(key);
  const BigInt n = numerator(v);
  if (n > 1000000 || n < -1000000) {
    throw InvalidParameter(std::string("lattice length ") + key + " out of range: " + to_string(v));
  }
  return n.convert_to<int>();
}

bool nonpos_int(const Scalar& s) { return is_integer(s) && s <= 0; }
bool positive_int(const Scalar& s) { return is_integer(s) && s > 0; }

// 0 < |d| < 1
bool unit_window(const Scalar& d) { return d != 0 && abs(d) < 1; }

std::string vs(const char* name, const Scalar& v) {
  return std::string(name) + " = " + to_string(v);
}

// Accumulates the first failed comparison of one alternative condition.
struct Cond {
  std::optional<std::string> failure;
  Cond& require(bool ok, const std::string& text) {
    if (!failure && !ok) failure = text;
    return *this;
  }
  bool ok() const { return !failure.has_value(); }
};

void clauses_charlier_charlier(const ParamMap& p, ValidationReport& rep) {
  const Scalar d = P(p, "gamma1") - P(p, "gamma2");
  if (!(P(p, "b") > 0)) rep.add("CC.b", "requires b > 0", vs("b", P(p, "b")));
  if (!unit_window(d)) rep.add("CC.window", "requires 0 < |gamma1-gamma2| < 1", vs("gamma1-gamma2", d));
}

void clauses_charlier_meixner(const ParamMap& p, ValidationReport& rep) {
  const Scalar d = P(p, "gamma1") - P(p, "gamma2");
  const Scalar& a = P(p, "alpha");
  if (!(P(p, "b") > 0)) rep.add("CM.b", "requires b > 0", vs("b", P(p, "b")));
  if (!(a > 0)) rep.add("CM.alpha", "requires alpha > 0", vs("alpha", a));
  if (!unit_window(d)) rep.add("CM.window", "requires 0 < |gamma1-gamma2| < 1", vs("gamma1-gamma2", d));
  if (!(d < a)) rep.add("CM.order", "requires gamma1-gamma2 < alpha",
                        vs("gamma1-gamma2", d) + ", " + vs("alpha", a));
}

void clauses_meixner_sorokin(const ParamMap& p, ValidationReport& rep) {
  const Scalar d = P(p, "gamma1") - P(p, "gamma2");
  const Scalar& a1 = P(p, "alpha1");
  const Scalar& a2 = P(p, "alpha2");
  const Scalar& b = P(p, "b");
  if (!(b > 0 && b < 1)) rep.add("MS.b", "requires 0 < b < 1", vs("b", b));
  if (!(a1 > 0)) rep.add("MS.alpha1", "requires alpha1 > 0", vs("alpha1", a1));
  if (!(a2 > 0)) rep.add("MS.alpha2", "requires alpha2 > 0", vs("alpha2", a2));
  if (!unit_window(d)) rep.add("MS.window", "requires 0 < |gamma1-gamma2| < 1", vs("gamma1-gamma2", d));
  if (!(-a2 < d && d < a1)) {
    rep.add("MS.order", "requires -alpha2 < gamma1-gamma2 < alpha1", vs("gamma1-gamma2", d));
  }
}

void clauses_kravchuk_kravchuk(const ParamMap& p, ValidationReport& rep) {
  const Scalar d = P(p, "gamma1") - P(p, "gamma2");
  const Scalar& b = P(p, "b");
  const int N1 = PI(p, "N1");
  const int N2 = PI(p, "N2");
  if (!(b > 0)) rep.add("KK.b", "requires b > 0", vs("b", b));
  const bool equal_shape = (N1 == N2) && unit_window(d);
  const bool stepped_shape = (N1 == N2 - 1) && d > 0 && d < 1;
  if (!equal_shape && !stepped_shape) {
    rep.add("KK.shape",
            "requires N1 = N2 with 0 < |gamma1-gamma2| < 1, or N1 = N2-1 with 0 < gamma1-gamma2 < 1",
            "N1 = " + std::to_string(N1) + ", N2 = " + std::to_string(N2) + ", " +
                vs("gamma1-gamma2", d));
  }
  // B = b here; degree preservation for an all-kravchuk pair needs B != (-1)^2.
  if (b == 1) {
    rep.add("KK.B", "requires b != 1: the leading coefficient cancels at B = 1 (see also MD2.2)",
            vs("b", b));
  }
}

void clauses_kravchuk_hahn_1(const ParamMap& p, ValidationReport& rep) {
  const Scalar d = P(p, "gamma1") - P(p, "gamma2");
  const Scalar& a = P(p, "alpha");
  const Scalar& bt = P(p, "beta");
  const int N1 = PI(p, "N1");
  const int N2 = PI(p, "N2");
  const Scalar sN2(N2);
  rep.note("chained comparisons below are conjunctions: every part must hold");

  auto tail_beta = [&](Cond& c) {  // regularity of the hahn tail parameters
    c.require(!nonpos_int(bt - d), "beta-gamma1+gamma2 must avoid {0,-1,-2,...}");
    c.require(!nonpos_int(bt), "beta must avoid {0,-1,-2,...}");
  };
  auto tail_alpha = [&](Cond& c) {
    c.require(!nonpos_int(a + d), "alpha+gamma1-gamma2 must avoid {0,-1,-2,...}");
    c.require(!nonpos_int(a), "alpha must avoid {0,-1,-2,...}");
  };

  std::vector<std::pair<std::string, Cond>> conds;
  {
    Cond c;
    const Scalar M = std::max(Scalar(0), Scalar(-d));
    c.require(N1 == N2, "needs N1 = N2");
    c.require(unit_window(d), "needs 0 < |gamma1-gamma2| < 1");
    c.require(a > M, "needs alpha > max{0, gamma2-gamma1}");
    c.require(-bt - sN2 > M, "needs -beta-N2 > max{0, gamma2-gamma1}");
    tail_beta(c);
    conds.emplace_back("KHI.a", c);
  }
  {
    Cond c;
    const Scalar M = std::max(Scalar(0), d);
    c.require(N1 == N2, "needs N1 = N2");
    c.require(unit_window(d), "needs 0 < |gamma1-gamma2| < 1");
    c.require(bt > M, "needs beta > max{0, gamma1-gamma2}");
    c.require(-a - sN2 > M, "needs -alpha-N2 > max{0, gamma1-gamma2}");
    tail_alpha(c);
    conds.emplace_back("KHI.b", c);
  }
  {
    Cond c;
    c.require(N1 == N2 - 1, "needs N1 = N2-1");
    c.require(d > 0 && d < 1, "needs 0 < gamma1-gamma2 < 1");
    c.require(a > 0, "needs alpha > 0");
    c.require(-bt - sN2 > 0, "needs -beta-N2 > 0");
    tail_beta(c);
    conds.emplace_back("KHI.c", c);
  }
  {
    Cond c;
    c.require(N1 == N2 - 1, "needs N1 = N2-1");
    c.require(d > 0 && d < 1, "needs 0 < gamma1-gamma2 < 1");
    c.require(bt > 0, "needs beta > 0");
    c.require(-a - sN2 > 0, "needs -alpha-N2 > 0");
    tail_alpha(c);
    conds.emplace_back("KHI.d", c);
  }
  {
    Cond c;
    c.require(N1 == N2 + 1, "needs N1 = N2+1");
    c.require(-d > 0 && -d < 1, "needs 0 < gamma2-gamma1 < 1");
    c.require(a > -d, "needs alpha > gamma2-gamma1");
    c.require(-bt - sN2 > -d, "needs -beta-N2 > gamma2-gamma1");
    tail_beta(c);
    conds.emplace_back("KHI.e", c);
  }
  {
    Cond c;
    const Scalar T = Scalar(1) + d;  // 1 - (gamma2-gamma1)
    c.require(N1 == N2 + 1, "needs N1 = N2+1");
    c.require(-d > 0 && -d < 1, "needs 0 < gamma2-gamma1 < 1");
    c.require(bt > T, "needs beta > 1-(gamma2-gamma1)");
    c.require(-a - sN2 > T, "needs -alpha-N2 > 1-(gamma2-gamma1)");
    tail_alpha(c);
    conds.emplace_back("KHI.f", c);
  }

  std::optional<std::string> matched;
  for (const auto& [id, c] : conds) {
    if (c.ok()) {
      matched = id;
      break;
    }
  }
  if (matched) {
    rep.note("admissible via condition " + *matched);
  } else {
    for (const auto& [id, c] : conds) {
      rep.add(id, "alternative failed", *c.failure);
    }
  }

  // Full-horizon regularity: alpha+beta must avoid
  // {N1-3N+3, ..., N1-2} and the single point N1, with N = min(N1, N2).
  const Scalar sum = a + bt;
  if (is_integer(sum)) {
    const int N = std::min(N1, N2);
    const Scalar lo = Scalar(N1 - 3 * N + 3);
    const Scalar hi = Scalar(N1 - 2);
    if ((sum >= lo && sum <= hi) || sum == Scalar(N1)) {
      rep.add("KHI.md2",
              "alpha+beta must avoid {N1-3N+3,...,N1-2} and N1 (N = min(N1,N2))",
              vs("alpha+beta", sum));
    }
  }
}

void clauses_charlier_kravchuk(const ParamMap& p, ValidationReport& rep) {
  const Scalar d = P(p, "gamma1") - P(p, "gamma2");
  const int N = PI(p, "N");
  if (!(P(p, "b") > 0)) rep.add("CK.b", "requires b > 0", vs("b", P(p, "b")));
  if (!(d > Scalar(N))) {
    rep.add("CK.gap", "requires gamma1-gamma2 > N",
            vs("gamma1-gamma2", d) + ", N = " + std::to_string(N));
  }
  if (positive_int(d)) rep.add("CK.lattice", "requires gamma1-gamma2 outside {1,2,3,...}", vs("gamma1-gamma2", d));
}

void clauses_meixner_kravchuk(const ParamMap& p, ValidationReport& rep) {
  const Scalar d = P(p, "gamma1") - P(p, "gamma2");
  const Scalar& b = P(p, "b");
  const Scalar& a = P(p, "alpha");
  const int N = PI(p, "N");
  if (!(b > 0 && b < 1)) rep.add("MK.b", "requires 0 < b < 1", vs("b", b));
  if (!(a > 0)) rep.add("MK.alpha", "requires alpha > 0", vs("alpha", a));
  if (!(d > Scalar(N))) {
    rep.add("MK.gap", "requires gamma1-gamma2 > N",
            vs("gamma1-gamma2", d) + ", N = " + std::to_string(N));
  }
  if (positive_int(d)) rep.add("MK.lattice", "requires gamma1-gamma2 outside {1,2,3,...}", vs("gamma1-gamma2", d));
}

void clauses_angelesco_kravchuk(const ParamMap& p, ValidationReport& rep) {
  const Scalar d = P(p, "gamma1") - P(p, "gamma2");
  const int N2 = PI(p, "N2");
  if (!(P(p, "b") > 0)) rep.add("AK.b", "requires b > 0", vs("b", P(p, "b")));
  if (!(d > Scalar(N2))) {
    rep.add("AK.gap", "requires gamma1-gamma2 > N2",
            vs("gamma1-gamma2", d) + ", N2 = " + std::to_string(N2));
  }
  if (positive_int(d)) rep.add("AK.lattice", "requires gamma1-gamma2 outside {1,2,3,...}", vs("gamma1-gamma2", d));
}

void clauses_kravchuk_hahn_2(const ParamMap& p, ValidationReport& rep) {
  const Scalar e = P(p, "gamma2") - P(p, "gamma1");
  const Scalar& a = P(p, "alpha");
  const Scalar& bt = P(p, "beta");
  const int N1 = PI(p, "N1");
  const int N2 = PI(p, "N2");
  const Scalar sN2(N2);

  Cond ca;
  ca.require(a > e, "needs alpha > gamma2-gamma1");
  ca.require(e > Scalar(N1), "needs gamma2-gamma1 > N1");
  ca.require(!positive_int(e), "needs gamma2-gamma1 outside {1,2,3,...}");
  ca.require(bt > 0, "needs beta > 0");

  Cond cb;
  cb.require(-bt - sN2 > e, "needs -beta-N2 > gamma2-gamma1");
  cb.require(e > Scalar(N1), "needs gamma2-gamma1 > N1");
  cb.require(!positive_int(e), "needs gamma2-gamma1 outside {1,2,3,...}");
  cb.require(-a - sN2 > 0, "needs -alpha-N2 > 0");
  cb.require(!nonpos_int(a - e), "alpha+gamma1-gamma2 must avoid {0,-1,-2,...}");
  cb.require(!nonpos_int(bt + e), "beta-gamma1+gamma2 must avoid {0,-1,-2,...}");
  cb.require(!nonpos_int(a), "alpha must avoid {0,-1,-2,...}");
  cb.require(!nonpos_int(bt), "beta must avoid {0,-1,-2,...}");

  if (ca.ok()) {
    rep.note("admissible via condition KHII.a");
  } else if (cb.ok()) {
    rep.note("admissible via condition KHII.b");
  } else {
    rep.add("KHII.a", "alternative failed", *ca.failure);
    rep.add("KHII.b", "alternative failed", *cb.failure);
  }
}

std::vector<WeightSpec> build_specs(Family f, const ParamMap& p) {
  switch (f) {
    case Family::CharlierCharlier:
      return {make_charlier(P(p, "b"), P(p, "gamma1")),
              make_charlier(Scalar(1), P(p, "gamma2"))};
    case Family::CharlierMeixner:
      return {make_charlier(P(p, "b"), P(p, "gamma1")),
              make_meixner(P(p, "alpha"), Scalar(1), P(p, "gamma2"))};
    case Family::MeixnerSorokin:
      return {make_meixner(P(p, "alpha1"), P(p, "b"), P(p, "gamma1")),
              make_meixner(P(p, "alpha2"), Scalar(1), P(p, "gamma2"))};
    case Family::KravchukKravchuk:
      return {make_kravchuk(P(p, "b"), PI(p, "N1"), P(p, "gamma1")),
              make_kravchuk(Scalar(1), PI(p, "N2"), P(p, "gamma2"))};
    case Family::KravchukHahn1:
    case Family::KravchukHahn2:
      return {make_kravchuk(Scalar(-1), PI(p, "N1"), P(p, "gamma1")),
              make_hahn(P(p, "alpha"), P(p, "beta"), PI(p, "N2"), P(p, "gamma2"))};
    case Family::CharlierKravchuk:
      return {make_charlier(-P(p, "b"), P(p, "gamma1")),
              make_kravchuk(Scalar(1), PI(p, "N"), P(p, "gamma2"))};
    case Family::MeixnerKravchuk:
      return {make_meixner(P(p, "alpha"), -P(p, "b"), P(p, "gamma1")),
              make_kravchuk(Scalar(1), PI(p, "N"), P(p, "gamma2"))};
    case Family::AngelescoKravchuk:
      return {make_kravchuk(-P(p, "b"), PI(p, "N1"), P(p, "gamma1")),
              make_kravchuk(Scalar(1), PI(p, "N2"), P(p, "gamma2"))};
  }
  throw InvalidParameter("unknown family");
}

void evaluate_clauses(Family f, const ParamMap& p, ValidationReport& rep) {
  switch (f) {
    case Family::CharlierCharlier: clauses_charlier_charlier(p, rep); return;
    case Family::CharlierMeixner: clauses_charlier_meixner(p, rep); return;
    case Family::MeixnerSorokin: clauses_meixner_sorokin(p, rep); return;
    case Family::KravchukKravchuk: clauses_kravchuk_kravchuk(p, rep); return;
    case Family::KravchukHahn1: clauses_kravchuk_hahn_1(p, rep); return;
    case Family::CharlierKravchuk: clauses_charlier_kravchuk(p, rep); return;
    case Family::MeixnerKravchuk: clauses_meixner_kravchuk(p, rep); return;
    case Family::AngelescoKravchuk: clauses_angelesco_kravchuk(p, rep); return;
    case Family::KravchukHahn2: clauses_kravchuk_hahn_2(p, rep); return;
  }
  throw InvalidParameter("unknown family");
}

}  // namespace

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> cat = [] {
    std::vector<FamilyInfo> v;
    v.push_back({Family::CharlierCharlier, "charlier-charlier",
                 "two charlier weights on interlacing infinite lattices",
                 {{"b", Scalar(1)}, {"gamma1", Scalar(0)}, {"gamma2", rat(1, 2)}}});
    v.push_back({Family::CharlierMeixner, "charlier-meixner",
                 "charlier and meixner weights on interlacing infinite lattices",
                 {{"b", Scalar(1)}, {"alpha", rat(1, 3)}, {"gamma1", Scalar(0)}, {"gamma2", rat(1, 2)}}});
    v.push_back({Family::MeixnerSorokin, "meixner-sorokin",
                 "two meixner weights on interlacing infinite lattices",
                 {{"b", rat(1, 2)}, {"alpha1", Scalar(1)}, {"alpha2", Scalar(1)},
                  {"gamma1", Scalar(0)}, {"gamma2", rat(1, 2)}}});
    v.push_back({Family::KravchukKravchuk, "kravchuk-kravchuk",
                 "two kravchuk weights on interlacing finite lattices",
                 {{"b", Scalar(2)}, {"N1", Scalar(20), true}, {"N2", Scalar(20), true},
                  {"gamma1", Scalar(0)}, {"gamma2", rat(1, 2)}}});
    v.push_back({Family::KravchukHahn1, "kravchuk-hahn-1",
                 "kravchuk and hahn weights on interlacing finite lattices",
                 {{"alpha", Scalar(1)}, {"beta", rat(-92, 3)}, {"N1", Scalar(20), true},
                  {"N2", Scalar(20), true}, {"gamma1", rat(-1, 3)}, {"gamma2", Scalar(0)}}});
    v.push_back({Family::CharlierKravchuk, "charlier-kravchuk",
                 "charlier lattice separated above a finite kravchuk lattice",
                 {{"b", Scalar(1)}, {"N", Scalar(10), true}, {"gamma1", rat(32, 3)}, {"gamma2", Scalar(0)}}});
    v.push_back({Family::MeixnerKravchuk, "meixner-kravchuk",
                 "meixner lattice separated above a finite kravchuk lattice",
                 {{"b", rat(1, 2)}, {"alpha", rat(1, 3)}, {"N", Scalar(10), true},
                  {"gamma1", rat(32, 3)}, {"gamma2", Scalar(0)}}});
    v.push_back({Family::AngelescoKravchuk, "angelesco-kravchuk",
                 "two kravchuk weights on separated finite lattices",
                 {{"b", Scalar(2)}, {"N1", Scalar(20), true}, {"N2", Scalar(20), true},
                  {"gamma1", Scalar(20)}, {"gamma2", rat(-1, 2)}}});
    v.push_back({Family::KravchukHahn2, "kravchuk-hahn-2",
                 "kravchuk and hahn weights on separated finite lattices",
                 {{"alpha", Scalar(21)}, {"beta", rat(4, 3)}, {"N1", Scalar(20), true},
                  {"N2", Scalar(20), true}, {"gamma1", rat(-1, 3)}, {"gamma2", Scalar(20)}}});
    return v;
  }();
  return cat;
}

const FamilyInfo& family_info(Family f) {
  for (const auto& info : family_catalog()) {
    if (info.family == f) return info;
  }
  throw InvalidParameter("unknown family");
}

std::optional<Family> family_by_name(std::string_view name) {
  for (const auto& info : family_catalog()) {
    if (info.name == name) return info.family;
  }
  return std::nullopt;
}

FamilyCheck check_family(Family f, const ParamMap& params) {
  const FamilyInfo& info = family_info(f);
  ParamMap p;
  for (const auto& pi : info.params) p.emplace(pi.name, pi.default_value);
  for (const auto& [key, value] : params) {
    const auto it = std::find_if(info.params.begin(), info.params.end(),
                                 [&](const ParamInfo& pi) { return pi.name == key; });
    if (it == info.params.end()) {
      throw InvalidParameter("unknown parameter \"" + key + "\" for preset " + info.name);
    }
    if (it->integer && !is_integer(value)) {
      throw InvalidParameter("parameter \"" + key + "\" of preset " + info.name +
                             " must be an integer, got " + to_string(value));
    }
    p[key] = value;
  }

  FamilyCheck out;
  evaluate_clauses(f, p, out.report);
  try {
    out.system = assemble_system(build_specs(f, p));
  } catch (const IntegerShiftDifference& e) {
    out.report.add("T1.shift", "lattice shifts must differ by nonintegers", e.what());
    return out;
  } catch (const InvalidParameter& e) {
    out.report.add(info.name + ".params", "weight parameters failed unification", e.what());
    return out;
  }
  const auto cap = out.system->Ncap();
  out.report.merge(check_MD2(*out.system, cap ? *cap : 0));
  return out;
}

}  // namespace dmop
