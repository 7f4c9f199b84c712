#pragma once

#include <string>
#include <vector>

namespace ldv {

/// Entry point behind the `ldv` binary, callable in-process. Exit codes:
/// 0 success, 1 usage error, 2 scenario or I/O error.
int cliMain(int argc, const char* const* argv);
int cliMain(const std::vector<std::string>& args);

}  // namespace ldv
