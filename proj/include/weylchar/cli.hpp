#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylchar {

/// Command-line driver. Exit codes: 0 success / all checks pass,
/// 1 mathematical failure or failed check, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylchar
