#ifndef TREEEMBED_TOOLS_CLI_HPP
#define TREEEMBED_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace treeembed::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kResource = 4;

inline constexpr int kSchemaVersion = 1;

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace treeembed::cli

#endif  // TREEEMBED_TOOLS_CLI_HPP
