#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppc::cli {

enum ExitCode : int { kOk = 0, kDomainFailure = 1, kUsage = 2 };

/// Runs one subcommand; `args` excludes the program name. The JSON summary goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppc::cli
