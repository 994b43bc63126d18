#include "dmop/rodrigues.hpp"

#include <string>

#include "dmop/errors.hpp"

namespace dmop {

UVPair build_uv(const WeightSystem& system, int t) {
  Polynomial U{Scalar(1)};
  Polynomial V = U;
  for (const auto& spec : system.weights) {
    const RatioUV row = ratio_uv(spec, t);
    U = U * row.u.shift_arg(spec.gamma);
    V = V * row.v.shift_arg(spec.gamma);
  }
  return {U, V};
}

RodriguesResult rodrigues_construct(const WeightSystem& system, int n) {
  if (n < 0) throw InvalidParameter("construction order must be >= 0, got " + std::to_string(n));
  const auto cap = system.Ncap();
  if (cap && n > *cap) {
    throw HorizonExceeded("order " + std::to_string(n) + " exceeds the lattice horizon " +
                          std::to_string(*cap));
  }

  RodriguesResult out;
  out.n = n;
  const int r = system.r();

  out.levels.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) out.levels.push_back(build_uv(system, t));

  Polynomial current{Scalar(1)};
  out.intermediates.reserve(static_cast<std::size_t>(n) + 1);
  out.intermediates.push_back(current);
  out.degree_trace.push_back({0, 0, 0});

  for (int m = 1; m <= n; ++m) {
    const UVPair& level = out.levels[static_cast<std::size_t>(n - m)];
    current = level.U * current - level.V * current.shift_arg(Scalar(1));
    const std::optional<int> deg = current.degree();
    const int expected = r * m;
    out.intermediates.push_back(current);
    out.degree_trace.push_back({m, expected, deg});
    if (deg != std::optional<int>(expected)) {
      throw DegreeCollapse("degree law violated at step " + std::to_string(m) + ": expected " +
                               std::to_string(expected) +
                               (deg ? ", got " + std::to_string(*deg) : ", got the zero polynomial"),
                           m, deg);
    }
  }

  out.P = current;
  return out;
}

RodriguesResult classical_construct(const WeightSpec& spec, int n) {
  return rodrigues_construct(assemble_system({spec}), n);
}

}  // namespace dmop
