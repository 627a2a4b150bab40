#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgl::cli {

/// Runs the command line given as argv-style arguments (without the program
/// name). Exit code 0 on success, 1 on an inequality violation or
/// sharpness-not-attained, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgl::cli
