#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cis/generating_function.hpp"

namespace cis::cli {

/// Exit codes: 0 success, 2 invalid input or usage, 3 numeric failure or
/// non-convergence.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a+bi" syntax, e.g. "0.5+0.25i", "-2i", "3".
Complex parse_complex(const std::string& text);

}  // namespace cis::cli
