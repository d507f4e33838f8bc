#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ksand::cli {

// Exit codes: 0 all checks pass, 1 a check failed, 2 usage error.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

// args excludes the program name. Reports go to out (or --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ksand::cli
