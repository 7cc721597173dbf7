#ifndef HCSUPER_TOOLS_CLI_HPP
#define HCSUPER_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hcsuper {

enum ExitCode { kExitOk = 0, kExitFailed = 1, kExitInput = 2 };

/// args excludes the program name. JSON goes to out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hcsuper

#endif
