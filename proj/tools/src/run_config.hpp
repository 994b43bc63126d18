#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmop/presets.hpp"
#include "dmop/scalar.hpp"
#include "dmop/validate.hpp"
#include "dmop/weights.hpp"

namespace dmop::cli {

// A fully resolved run request. Exactly one of `family` / `weights` is set.
struct RunConfig {
  std::optional<Family> family;
  ParamMap params;
  std::vector<WeightSpec> weights;

  int n_min = 0;
  int n_max = 5;
  Scalar tol = Scalar(1) / pow_int(Scalar(10), 30);
  unsigned precision_bits = 256;
  Scalar real_tol = Scalar(1) / pow_int(Scalar(10), 10);
  std::string format = "csv";  // "csv" | "json"
  std::string out = ".";
  std::optional<std::string> coeffs_in;
};

// Values given on the command line; they override the config file.
struct CliOverrides {
  std::string config_path;   // --config
  std::string preset;        // --preset
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<unsigned> precision;
  std::optional<std::string> tol;
  std::optional<int> n_min;
  std::optional<int> n_max;
};

// Strict parser for the versioned JSON config (schema "dmop/1"): unknown
// keys, JSON floats, and malformed rationals all throw ConfigError. Rational
// values are "p/q" strings (or exact JSON integers); structural counts
// (n_min, n_max, precision_bits, lattice N) are JSON integers.
RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// A config whose system is the named preset with its default parameters.
RunConfig config_from_preset(const std::string& name);

// Resolves --config / --preset (exactly one) and applies the overrides.
// Throws ConfigError on any inconsistency (both sources, neither source,
// n_min > n_max, unknown format, ...).
RunConfig resolve_config(const CliOverrides& cli);

// The assembled system together with its validation verdict. For a family
// config this is check_family; for a raw weight list it is shift
// admissibility plus the system-level regularity over the lattice horizon
// (or n_max when every lattice is infinite), plus the single-weight
// regularity clauses when there is exactly one weight.
struct LoadedSystem {
  ValidationReport report;
  std::optional<WeightSystem> system;
};

LoadedSystem load_and_validate(const RunConfig& cfg);

}  // namespace dmop::cli
