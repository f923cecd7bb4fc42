#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tokens {

// Full command-line surface as a library function so tests can drive it
// in-process. Returns the process exit code: 0 success, 1 a check failed
// mathematically, 2 usage or I/O trouble.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tokens
