#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace streakcount::cli {

/// Entry point shared by the executable and the tests. args[0] is the
/// program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace streakcount::cli
