#include <iostream>

#include "CLI11.hpp"
#include "dmop/errors.hpp"
#include "run_config.hpp"
#include "runners.hpp"

int main(int argc, char** argv) {
  using namespace dmop;
  using namespace dmop::cli;

  CLI::App app{"construction and verification of discrete multiple orthogonal polynomials"};
  app.require_subcommand(1);

  CliOverrides ov;
  std::string presets_format = "text";

  const auto add_common = [&ov](CLI::App* sub) {
    sub->add_option("--config", ov.config_path, "JSON run configuration (schema dmop/1)");
    sub->add_option("--preset", ov.preset, "named preset with default parameters");
    sub->add_option("--out", ov.out, "output directory");
    sub->add_option("--format", ov.format, "output format: csv or json");
    sub->add_option("--precision", ov.precision, "working precision in bits");
    sub->add_option("--tol", ov.tol, "verification tolerance as p/q");
    sub->add_option("--n-min", ov.n_min, "lowest construction order");
    sub->add_option("--n-max", ov.n_max, "highest construction order");
  };

  auto* c_construct =
      app.add_subcommand("construct", "build the polynomials and their degree trace");
  add_common(c_construct);
  auto* c_verify = app.add_subcommand(
      "verify", "check orthogonality, the independent moment oracle, and the difference pair");
  add_common(c_verify);
  auto* c_zeros =
      app.add_subcommand("zeros", "locate all zeros and classify them against the lattice hulls");
  add_common(c_zeros);
  auto* c_validate = app.add_subcommand("validate", "evaluate the admissibility clauses");
  add_common(c_validate);
  auto* c_presets = app.add_subcommand("presets", "list the built-in weight-pair presets");
  c_presets->add_option("--format", presets_format, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_presets->parsed()) return run_presets(presets_format, std::cout);
    const RunConfig cfg = resolve_config(ov);
    if (c_validate->parsed()) return run_validate(cfg, std::cout);
    if (c_construct->parsed()) return run_construct(cfg, std::cout);
    if (c_verify->parsed()) return run_verify(cfg, std::cout);
    if (c_zeros->parsed()) return run_zeros(cfg, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const DegreeCollapse& e) {
    std::cerr << "degree collapse: " << e.what() << '\n';
    return 3;
  } catch (const NoConvergence& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return 5;
  } catch (const TailNotContracting& e) {
    std::cerr << "verification impossible: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
