// Micro-benchmarks for the hot paths: construction, certified summation,
// moment elimination, and zero finding. Run on demand:
//   ./build/benchmarks/dmop_bench [--benchmark_filter=...]

#include <benchmark/benchmark.h>

#include "dmop/bigfloat.hpp"
#include "dmop/presets.hpp"
#include "dmop/rodrigues.hpp"
#include "dmop/verify.hpp"
#include "dmop/zeros.hpp"

namespace {

using namespace dmop;

WeightSystem preset(Family f) {
  FamilyCheck fc = check_family(f, {});
  if (!fc.report.pass || !fc.system) throw std::runtime_error("preset defaults inadmissible");
  return *fc.system;
}

const Scalar kTol = Scalar(1) / pow_int(Scalar(10), 30);

// Full product construction on two disjoint finite lattices.
void BM_Construct(benchmark::State& state) {
  WeightSystem sys = preset(Family::AngelescoKravchuk);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rodrigues_construct(sys, n));
  }
}
BENCHMARK(BM_Construct)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

// Exact finite-lattice orthogonality residuals (all sums rational).
void BM_ExactOrthogonality(benchmark::State& state) {
  WeightSystem sys = preset(Family::KravchukKravchuk);
  const int n = static_cast<int>(state.range(0));
  Polynomial P = rodrigues_construct(sys, n).P;
  for (auto _ : state) {
    benchmark::DoNotOptimize(orthogonality_residuals(sys, P, n, kTol));
  }
}
BENCHMARK(BM_ExactOrthogonality)->Arg(4)->Arg(8);

// Certified truncated summation over an infinite lattice.
void BM_CertifiedSum(benchmark::State& state) {
  WeightSystem sys = preset(Family::CharlierCharlier);
  Polynomial Q = Polynomial::monomial(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certified_sum(sys, 0, Q, kTol));
  }
}
BENCHMARK(BM_CertifiedSum)->Arg(4)->Arg(16);

// Moment matrix assembly plus exact nullspace elimination.
void BM_MomentOracle(benchmark::State& state) {
  WeightSystem sys = preset(Family::AngelescoKravchuk);
  const int n = static_cast<int>(state.range(0));
  Polynomial P = rodrigues_construct(sys, n).P;
  for (auto _ : state) {
    benchmark::DoNotOptimize(compare_with_moment_oracle(sys, P, n, kTol, true));
  }
}
BENCHMARK(BM_MomentOracle)->Arg(2)->Arg(4);

// Simultaneous zero iteration at fixed precision.
void BM_FindZeros(benchmark::State& state) {
  WeightSystem sys = preset(Family::AngelescoKravchuk);
  const int n = static_cast<int>(state.range(0));
  Polynomial P = rodrigues_construct(sys, n).P;
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_zeros(P, 256));
  }
}
BENCHMARK(BM_FindZeros)->Arg(4)->Arg(8);

// Exact argument shift p(x - t), the inner operation of the recurrence.
void BM_ShiftArg(benchmark::State& state) {
  WeightSystem sys = preset(Family::KravchukHahn2);
  Polynomial P = rodrigues_construct(sys, static_cast<int>(state.range(0))).P;
  const Scalar t(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(P.shift_arg(t));
  }
}
BENCHMARK(BM_ShiftArg)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
