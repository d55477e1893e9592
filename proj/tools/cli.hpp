#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace muforge {

// Command-line front end.  args excludes the program name.  Exit codes:
// 0 success or true verdict, 1 false verdict, 2 usage, 3 malformed input,
// 4 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace muforge
