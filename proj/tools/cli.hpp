#ifndef SBC_TOOLS_CLI_HPP
#define SBC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sbc::cli {

enum ExitStatus : int {
  kSuccess = 0,
  kDiagnostics = 1,
  kUsage = 2,
  kIoError = 3,
};

struct Options {
  bool color = false;
};

/// Runs one `sbc-itg` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Options& options = {});

/// Color policy from SBC_ITG_COLOR (never|auto) and whether stderr is a tty.
bool color_from_env();

}  // namespace sbc::cli

#endif  // SBC_TOOLS_CLI_HPP
