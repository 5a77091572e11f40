#pragma once

#include <string>
#include <vector>

namespace pcvp {

// Command-line front end. Exit codes: 0 success/YES, 1 answered NO (or a
// witness/certificate failed its check), 2 witness decode failure, 64 usage
// error, 65 parse error, 70 internal invariant violation.
int run_cli(const std::vector<std::string>& args);

}  // namespace pcvp
