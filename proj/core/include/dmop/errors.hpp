#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace dmop {

// Base class of every error thrown by the library. All failure modes are
// typed so callers (and the CLI exit-code map) can dispatch without parsing
// message text.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A rational-function denominator became the zero polynomial, or a scalar
// division by zero was requested.
struct ZeroDenominator : Error {
  using Error::Error;
};

// A weight parameter violates its family's domain or unification rules
// (e.g. supplying beta to a Kravchuk weight, a negative lattice length).
struct InvalidParameter : Error {
  using Error::Error;
};

// A Hahn ratio row was requested at a level m where alpha+m or beta+m
// vanishes, so the normalizing factor 1/((alpha+m)(beta+m)) is undefined.
struct DegenerateHahn : Error {
  using Error::Error;
};

// The forward weight ratio has a pole on a node inside some lattice's
// summation range, so relative weights cannot be propagated across it.
struct PoleOnLattice : Error {
  using Error::Error;
};

// Two lattice shifts differ by an integer (directly, or through an
// alpha/beta parameter), which collapses the multi-lattice structure.
struct IntegerShiftDifference : Error {
  using Error::Error;
};

// Construction was requested past the shortest finite lattice.
struct HorizonExceeded : Error {
  using Error::Error;
};

// An intermediate polynomial came out with the wrong degree. `step` is the
// recurrence step m at which it happened; `observed` is the actual degree
// (nullopt when the polynomial vanished identically).
struct DegreeCollapse : Error {
  DegreeCollapse(std::string msg, int step_, std::optional<int> observed_)
      : Error(std::move(msg)), step(step_), observed(observed_) {}
  int step;
  std::optional<int> observed;
};

// The term-ratio limit of an infinite lattice sum is >= 1, so no geometric
// tail bound exists and the sum cannot be certified.
struct TailNotContracting : Error {
  using Error::Error;
};

// The moment matrix could not be put in the expected rank configuration
// (empty nullspace where theory guarantees a solution).
struct SingularConstruction : Error {
  using Error::Error;
};

// An operation defined only for a specific number of weights (e.g. support
// classification, which needs exactly two) was called with another arity.
struct UnsupportedArity : Error {
  using Error::Error;
};

// A derived Pearson pair violates its degree contract.
struct DegreeBoundViolated : Error {
  using Error::Error;
};

// The zero finder did not reach its stopping criterion within the iteration
// budget. Carries no payload; the solver surfaces partial results separately.
struct NoConvergence : Error {
  using Error::Error;
};

// Malformed run configuration (unknown key, lossy number, missing field...).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace dmop
