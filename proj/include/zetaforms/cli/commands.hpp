#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zetaforms/cli/run_config.hpp"

namespace zetaforms::cli {

/// Each command writes its report to `out`, diagnostics to `err`, and
/// returns an ExitCode.
int cmd_forms(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_rates(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_bound(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_integral(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (including the program name) and dispatches.  Reports go to
/// `out` unless --out names a file.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zetaforms::cli
