#ifndef MOONSHINE_TOOLS_CLI_HPP
#define MOONSHINE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace moonshine::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace moonshine::cli

#endif
