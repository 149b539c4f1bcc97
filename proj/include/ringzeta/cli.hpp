#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ringzeta {

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int comparison_failed = 1;
inline constexpr int usage = 2;
inline constexpr int resource_guard = 3;
inline constexpr int internal = 4;
}  // namespace exit_code

/// Runs the command line tool on args (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringzeta
