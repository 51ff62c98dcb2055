#pragma once

// Command-line front end. Exit status: 0 success, 1 domain error, 2 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace rspin::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rspin::cli
