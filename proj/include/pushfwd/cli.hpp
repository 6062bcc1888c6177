// Command-line front end, exposed as a library function so tests can
// drive it and compare golden output.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pushfwd {

// Exit codes: 0 success, 1 computation error, 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pushfwd
