#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace idg {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResourceLimit = 3;
}  // namespace exit_code

/// The idg command line, without the program name. Results go to `out`,
/// diagnostics to `err` as one JSON object per line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace idg
