#pragma once

#include <iosfwd>
#include <string>

#include "run_config.hpp"

namespace dmop::cli {

// Each runner prints a one-line human summary (and failure details) to
// `out`, writes its artifacts under cfg.out, and returns the process exit
// code: 0 success, 2 validation failure, 4 verification failure. Exit codes
// 1 (config), 3 (degree collapse), and 5 (no convergence) travel as
// exceptions to the top-level dispatcher.
int run_presets(const std::string& format, std::ostream& out);
int run_validate(const RunConfig& cfg, std::ostream& out);
int run_construct(const RunConfig& cfg, std::ostream& out);
int run_verify(const RunConfig& cfg, std::ostream& out);
int run_zeros(const RunConfig& cfg, std::ostream& out);

}  // namespace dmop::cli
