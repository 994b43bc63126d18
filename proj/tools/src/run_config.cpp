#include "run_config.hpp"

#include <fstream>
#include <sstream>

#include "dmop/errors.hpp"
#include "json.hpp"

namespace dmop::cli {

namespace {

using Json = nlohmann::json;

Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    try {
      return parse_scalar(j.get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long long>());
  throw ConfigError(where + " must be an exact rational: a \"p/q\" string or a JSON integer");
}

int int_from_json(const Json& j, const std::string& where, long long lo, long long hi) {
  if (!j.is_number_integer()) {
    throw ConfigError(where + " must be a JSON integer (floats are rejected)");
  }
  const long long v = j.get<long long>();
  if (v < lo || v > hi) {
    throw ConfigError(where + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                      "]");
  }
  return static_cast<int>(v);
}

std::string string_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ConfigError(where + " must be a string");
  return j.get<std::string>();
}

WeightKind kind_from_name(const std::string& name, const std::string& where) {
  if (name == "charlier") return WeightKind::Charlier;
  if (name == "meixner") return WeightKind::Meixner;
  if (name == "kravchuk") return WeightKind::Kravchuk;
  if (name == "hahn") return WeightKind::Hahn;
  throw ConfigError(where + ": unknown weight kind \"" + name +
                    "\" (expected charlier, meixner, kravchuk, or hahn)");
}

WeightSpec weight_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  std::optional<WeightKind> kind;
  RawWeightParams raw;
  std::optional<Scalar> gamma;
  for (const auto& [key, value] : j.items()) {
    const std::string at = where + "." + key;
    if (key == "kind") {
      kind = kind_from_name(string_from_json(value, at), at);
    } else if (key == "alpha") {
      raw.alpha = scalar_from_json(value, at);
    } else if (key == "beta") {
      raw.beta = scalar_from_json(value, at);
    } else if (key == "b") {
      raw.b = scalar_from_json(value, at);
    } else if (key == "N") {
      raw.N = int_from_json(value, at, 0, 1000000);
    } else if (key == "gamma") {
      gamma = scalar_from_json(value, at);
    } else {
      throw ConfigError(where + ": unknown key \"" + key + "\"");
    }
  }
  if (!kind) throw ConfigError(where + ": missing \"kind\"");
  if (!gamma) throw ConfigError(where + ": missing \"gamma\"");
  try {
    return make_weight_spec(*kind, raw, *gamma);
  } catch (const InvalidParameter& e) {
    throw ConfigError(where + ": " + e.what());
  }
}

void validate_ranges(const RunConfig& cfg) {
  if (cfg.n_min < 0) throw ConfigError("n_min must be >= 0");
  if (cfg.n_max < cfg.n_min) throw ConfigError("n_max must be >= n_min");
  if (!(cfg.tol > 0)) throw ConfigError("tol must be positive");
  if (!(cfg.real_tol > 0)) throw ConfigError("real_tol must be positive");
  if (cfg.precision_bits < 64 || cfg.precision_bits > 65536) {
    throw ConfigError("precision_bits must lie in [64, 65536]");
  }
  if (cfg.format != "csv" && cfg.format != "json") {
    throw ConfigError("format must be \"csv\" or \"json\"");
  }
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be a JSON object");

  RunConfig cfg;
  bool saw_schema = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "schema") {
      const std::string s = string_from_json(value, "schema");
      if (s != "dmop/1") throw ConfigError("unsupported schema \"" + s + "\" (expected dmop/1)");
      saw_schema = true;
    } else if (key == "family") {
      const std::string name = string_from_json(value, "family");
      const auto fam = family_by_name(name);
      if (!fam) throw ConfigError("unknown family \"" + name + "\" (see the presets subcommand)");
      cfg.family = *fam;
    } else if (key == "params") {
      if (!value.is_object()) throw ConfigError("params must be an object");
      for (const auto& [pname, pvalue] : value.items()) {
        cfg.params[pname] = scalar_from_json(pvalue, "params." + pname);
      }
    } else if (key == "weights") {
      if (!value.is_array() || value.empty()) {
        throw ConfigError("weights must be a nonempty array");
      }
      for (std::size_t i = 0; i < value.size(); ++i) {
        cfg.weights.push_back(weight_from_json(value[i], "weights[" + std::to_string(i) + "]"));
      }
    } else if (key == "n_min") {
      cfg.n_min = int_from_json(value, "n_min", 0, 1000000);
    } else if (key == "n_max") {
      cfg.n_max = int_from_json(value, "n_max", 0, 1000000);
    } else if (key == "tol") {
      cfg.tol = scalar_from_json(value, "tol");
    } else if (key == "precision_bits") {
      cfg.precision_bits = static_cast<unsigned>(int_from_json(value, "precision_bits", 64, 65536));
    } else if (key == "real_tol") {
      cfg.real_tol = scalar_from_json(value, "real_tol");
    } else if (key == "format") {
      cfg.format = string_from_json(value, "format");
    } else if (key == "out") {
      cfg.out = string_from_json(value, "out");
    } else if (key == "coeffs_in") {
      cfg.coeffs_in = string_from_json(value, "coeffs_in");
    } else {
      throw ConfigError("unknown config key \"" + key + "\"");
    }
  }
  if (!saw_schema) throw ConfigError("config is missing \"schema\": \"dmop/1\"");
  if (cfg.family && !cfg.weights.empty()) {
    throw ConfigError("config must set either \"family\" or \"weights\", not both");
  }
  if (!cfg.family && cfg.weights.empty()) {
    throw ConfigError("config must set \"family\" (with optional \"params\") or \"weights\"");
  }
  if (!cfg.family && !cfg.params.empty()) {
    throw ConfigError("\"params\" requires \"family\"");
  }
  validate_ranges(cfg);
  return cfg;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

RunConfig config_from_preset(const std::string& name) {
  const auto fam = family_by_name(name);
  if (!fam) {
    std::string known;
    for (const auto& info : family_catalog()) {
      if (!known.empty()) known += ", ";
      known += info.name;
    }
    throw ConfigError("unknown preset \"" + name + "\" (known: " + known + ")");
  }
  RunConfig cfg;
  cfg.family = *fam;
  return cfg;
}

RunConfig resolve_config(const CliOverrides& cli) {
  if (!cli.config_path.empty() && !cli.preset.empty()) {
    throw ConfigError("pass either --config or --preset, not both");
  }
  RunConfig cfg;
  if (!cli.config_path.empty()) {
    cfg = parse_config_file(cli.config_path);
  } else if (!cli.preset.empty()) {
    cfg = config_from_preset(cli.preset);
  } else {
    throw ConfigError("a run needs --config FILE or --preset NAME");
  }
  if (cli.out) cfg.out = *cli.out;
  if (cli.format) cfg.format = *cli.format;
  if (cli.precision) cfg.precision_bits = *cli.precision;
  if (cli.tol) cfg.tol = parse_scalar(*cli.tol);
  if (cli.n_min) cfg.n_min = *cli.n_min;
  if (cli.n_max) cfg.n_max = *cli.n_max;
  validate_ranges(cfg);
  return cfg;
}

LoadedSystem load_and_validate(const RunConfig& cfg) {
  LoadedSystem out;
  if (cfg.family) {
    try {
      FamilyCheck fc = check_family(*cfg.family, cfg.params);
      out.report = std::move(fc.report);
      out.system = std::move(fc.system);
    } catch (const InvalidParameter& e) {
      throw ConfigError(e.what());  // unknown parameter name, non-integer lattice length
    }
    return out;
  }

  try {
    out.system = assemble_system(cfg.weights);
  } catch (const IntegerShiftDifference& e) {
    out.report.add("T1.shift", "lattice shifts must differ by nonintegers", e.what());
    return out;
  }
  if (out.system->r() == 1) {
    out.report.merge(check_D2(out.system->weights.front()));
  }
  const auto cap = out.system->Ncap();
  out.report.merge(check_MD2(*out.system, cap ? *cap : cfg.n_max));
  return out;
}

}  // namespace dmop::cli
