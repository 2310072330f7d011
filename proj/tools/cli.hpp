#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mutalg {

/// Exit status: 0 success or member, 1 verified negative, 2 usage, parse or
/// validation error. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mutalg
