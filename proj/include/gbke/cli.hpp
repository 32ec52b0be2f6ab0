#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gbke {

/// Exit codes: 0 ok, 1 domain or usage error, 2 resource error, 3 decryption failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gbke
