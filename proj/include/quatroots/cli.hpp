#ifndef QUATROOTS_CLI_HPP
#define QUATROOTS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace quatroots {

/// Process exit codes.
enum ExitCode : int {
    exit_ok = 0,
    exit_parse = 1,
    exit_algebra = 2,
    exit_precondition = 3,
    exit_numeric = 4,
    exit_internal = 5,
};

/// Runs one command line (program name excluded) and returns its exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatroots

#endif  // QUATROOTS_CLI_HPP
