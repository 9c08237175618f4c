#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace igf {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // a verification failed or a computation did not converge
    kExitUsage = 2,    // bad command line, unknown name, unparsable text
    kExitDomain = 3,   // arguments outside the mathematical domain
};

/// Runs the `eval`, `verify` and `transform` subcommands. `args` excludes
/// the program name. Reports go to `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace igf
