#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace jacpair {

// Full command dispatch; returns the process exit code (0 success/PASS,
// 1 verification failure, 2 usage or parse error).
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace jacpair
