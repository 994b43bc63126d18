#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "dmop/bigfloat.hpp"
#include "dmop/errors.hpp"
#include "dmop/presets.hpp"
#include "dmop/rodrigues.hpp"
#include "dmop/zeros.hpp"

using namespace dmop;

namespace {

WeightSystem preset_system(Family f) {
  FamilyCheck fc = check_family(f, {});
  REQUIRE(fc.report.pass);
  return *fc.system;
}

const Scalar kRealTol = Scalar(1) / pow_int(Scalar(10), 10);

}  // namespace

TEST_CASE("edge cases: constants and the zero polynomial") {
  CHECK_THROWS_AS(find_zeros(Polynomial(), 256), InvalidParameter);
  CHECK(find_zeros(Polynomial(Scalar(3)), 256).empty());
  CHECK_THROWS_AS(find_zeros_adaptive(Polynomial()), InvalidParameter);
}

TEST_CASE("x^2 + 1 yields the conjugate pair +-i") {
  PrecisionGuard guard(256);
  auto zs = find_zeros(Polynomial(std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(1)}), 256);
  REQUIRE(zs.size() == 2);
  BigFloat tol("1e-30");
  // The real parts are pure rounding noise, so the (re, im) sort order
  // between the two roots is not meaningful; compare as a set.
  CHECK(abs(zs[0].re) < tol);
  CHECK(abs(zs[1].re) < tol);
  BigFloat im_lo = min(zs[0].im, zs[1].im);
  BigFloat im_hi = max(zs[0].im, zs[1].im);
  CHECK(abs(im_lo + 1) < tol);
  CHECK(abs(im_hi - 1) < tol);
}

TEST_CASE("quadratic with irrational roots matches mpfr sqrt") {
  // 1 + x/2 - x^2 has roots (1 +- sqrt(17)) / 4.
  PrecisionGuard guard(256);
  Polynomial p(std::vector<Scalar>{Scalar(1), Scalar(1) / 2, Scalar(-1)});
  auto zs = find_zeros(p, 256);
  REQUIRE(zs.size() == 2);
  BigFloat root17 = sqrt(BigFloat(17));
  BigFloat lo = (1 - root17) / 4;
  BigFloat hi = (1 + root17) / 4;
  BigFloat tol("1e-35");
  CHECK(abs(zs[0].re - lo) < tol);
  CHECK(abs(zs[1].re - hi) < tol);
  CHECK(abs(zs[0].im) < tol);
  CHECK(abs(zs[1].im) < tol);
}

TEST_CASE("rational roots are recovered to full working precision") {
  PrecisionGuard guard(256);
  // roots -3/2, 0, 2/7
  Polynomial p = Polynomial(std::vector<Scalar>{Scalar(3) / 2, Scalar(1)}) * Polynomial::x() *
                 Polynomial(std::vector<Scalar>{Scalar(-2) / 7, Scalar(1)});
  auto zs = find_zeros(p, 256);
  REQUIRE(zs.size() == 3);
  BigFloat tol("1e-30");
  CHECK(abs(zs[0].re + BigFloat(3) / 2) < tol);
  CHECK(abs(zs[1].re) < tol);
  CHECK(abs(zs[2].re - BigFloat(2) / 7) < tol);
}

TEST_CASE("triple root cluster stays tightly grouped") {
  PrecisionGuard guard(256);
  // (x - 1/2)^3: multiple roots converge through the residual cutoff; the
  // cluster radius is far below the real_tol used for classification.
  Polynomial f(std::vector<Scalar>{Scalar(-1) / 2, Scalar(1)});
  Polynomial p = f * f * f;
  auto zs = find_zeros(p, 256);
  REQUIRE(zs.size() == 3);
  BigFloat tol("1e-15");
  for (const auto& z : zs) {
    CHECK(abs(z.re - BigFloat(1) / 2) < tol);
    CHECK(abs(z.im) < tol);
  }
}

TEST_CASE("twelve equispaced real roots via the adaptive ladder") {
  Polynomial p(Scalar(1));
  for (int k = 1; k <= 12; ++k) p = p * Polynomial(std::vector<Scalar>{Scalar(-k), Scalar(1)});
  auto zs = find_zeros_adaptive(p, 256, 4096, Scalar(1) / pow_int(Scalar(10), 25));
  REQUIRE(zs.size() == 12);
  PrecisionGuard guard(256);
  BigFloat tol("1e-20");
  for (int k = 0; k < 12; ++k) {
    CHECK(abs(zs[static_cast<size_t>(k)].re - (k + 1)) < tol);
    CHECK(abs(zs[static_cast<size_t>(k)].im) < tol);
  }
}

TEST_CASE("runs are bitwise deterministic") {
  Polynomial p(std::vector<Scalar>{Scalar(-3), Scalar(1), Scalar(-4), Scalar(1), Scalar(2)});
  auto a = find_zeros(p, 256);
  auto b = find_zeros(p, 256);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].re == b[i].re);
    CHECK(a[i].im == b[i].im);
  }
}

TEST_CASE("zero_report classifies against lattice hulls") {
  PrecisionGuard guard(256);
  WeightSystem charlier = assemble_system({make_charlier(Scalar(1), Scalar(0))});
  // (x^2+1)(x^2-2x+5)(x-3): one real zero at 3, two conjugate pairs.
  Polynomial p = Polynomial(std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(1)}) *
                 Polynomial(std::vector<Scalar>{Scalar(5), Scalar(-2), Scalar(1)}) *
                 Polynomial(std::vector<Scalar>{Scalar(-3), Scalar(1)});
  ZeroReport rep = zero_report(find_zeros(p, 256), charlier, kRealTol);
  CHECK(rep.real_count == 1);
  CHECK(rep.complex_count == 4);
  CHECK(rep.conjugates_ok);
  REQUIRE(rep.per_hull.size() == 1);
  CHECK(rep.per_hull[0] == 1);
  CHECK(rep.min_pair_distance > 0);
  int reals = 0;
  for (const auto& z : rep.zeros) {
    if (z.is_real) {
      ++reals;
      CHECK(z.hull == 0);
    } else {
      CHECK(z.hull == -1);
    }
  }
  CHECK(reals == 1);
}

TEST_CASE("zero_report argument guards") {
  WeightSystem charlier = assemble_system({make_charlier(Scalar(1), Scalar(0))});
  CHECK_THROWS_AS(zero_report({}, charlier, Scalar(0)), InvalidParameter);
  ZeroReport rep = zero_report({}, charlier, kRealTol);
  CHECK(rep.zeros.empty());
  CHECK(rep.real_count == 0);
}

TEST_CASE("real zero outside every hull is counted but unattributed") {
  PrecisionGuard guard(256);
  WeightSystem kk = preset_system(Family::KravchukKravchuk);  // hulls near [0, 20.5]
  Polynomial p(std::vector<Scalar>{Scalar(100), Scalar(1)});                     // root at -100
  ZeroReport rep = zero_report(find_zeros(p, 256), kk, kRealTol);
  CHECK(rep.real_count == 1);
  CHECK(rep.zeros[0].hull == -1);
  CHECK(rep.per_hull == std::vector<int>{0, 0});
}

TEST_CASE("constructed polynomials on disjoint lattices: all zeros real, n per hull") {
  for (Family f : {Family::AngelescoKravchuk, Family::KravchukHahn2}) {
    WeightSystem sys = preset_system(f);
    for (int n = 1; n <= 3; ++n) {
      Polynomial P = rodrigues_construct(sys, n).P;
      auto zs = find_zeros_adaptive(P, 256);
      ZeroReport rep = zero_report(zs, sys, kRealTol);
      INFO("family ", static_cast<int>(f), " n=", n);
      CHECK(rep.real_count == 2 * n);
      CHECK(rep.complex_count == 0);
      CHECK(rep.conjugates_ok);
      REQUIRE(rep.per_hull.size() == 2);
      CHECK(rep.per_hull[0] == n);
      CHECK(rep.per_hull[1] == n);
      PrecisionGuard guard(256);
      CHECK(rep.min_pair_distance > BigFloat("1e-6"));
    }
  }
}

TEST_CASE("interlacing of consecutive orders on the first angelesco hull") {
  // Real zeros inside one hull of consecutive orders strictly interlace.
  WeightSystem sys = preset_system(Family::AngelescoKravchuk);
  Polynomial P2 = rodrigues_construct(sys, 2).P;
  Polynomial P3 = rodrigues_construct(sys, 3).P;
  ZeroReport r2 = zero_report(find_zeros_adaptive(P2, 256), sys, kRealTol);
  ZeroReport r3 = zero_report(find_zeros_adaptive(P3, 256), sys, kRealTol);
  std::vector<BigFloat> h2, h3;
  for (const auto& z : r2.zeros)
    if (z.hull == 0) h2.push_back(z.re);
  for (const auto& z : r3.zeros)
    if (z.hull == 0) h3.push_back(z.re);
  REQUIRE(h2.size() == 2);
  REQUIRE(h3.size() == 3);
  CHECK(h3[0] < h2[0]);
  CHECK(h2[0] < h3[1]);
  CHECK(h3[1] < h2[1]);
  CHECK(h2[1] < h3[2]);
}
