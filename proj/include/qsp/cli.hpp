#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsp {

/// Runs the `qsp` command line (arguments without the program name). Output
/// goes to `out` unless `--out` names a file; failures print
/// `error: <Kind>: <message>` to `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// True when QSP_SCOPE=extended is set (A3, n = 4).
bool extended_scope_from_env();

}  // namespace qsp
