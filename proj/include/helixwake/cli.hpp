#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace helixwake {

enum ExitCode : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitSimulation = 3,
  kExitIo = 4,
};

/// Entry point behind the helixwake binary. args excludes the program name.
/// Command-line and config errors both exit with kExitConfig.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace helixwake
