#pragma once

#include <string>
#include <vector>

namespace sod::cli {

/// Dispatches a full command line (without argv[0]). Returns the process
/// exit code: 0 when all checks pass, 1 when a verification check fails,
/// 2 on usage or input errors. The report goes to stdout, diagnostics to
/// stderr.
int run(const std::vector<std::string>& args);

}  // namespace sod::cli
