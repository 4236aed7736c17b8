#ifndef ITERCON_TOOLS_CLI_HPP
#define ITERCON_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace itercon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitResource = 3;

/// Runs one command. `args` excludes the program name. Output is written to `out` in one
/// piece after the command finishes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itercon::cli

#endif  // ITERCON_TOOLS_CLI_HPP
