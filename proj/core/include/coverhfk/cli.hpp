#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coverhfk::cli {

/// Runs one CLI invocation. args excludes argv[0].
/// Exit codes: 0 success, 1 verification failure, 2 invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coverhfk::cli
