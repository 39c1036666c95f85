#ifndef WEIGHTGEOM_CLI_HPP
#define WEIGHTGEOM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace wg {

// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInconsistent = 1,  // a consistency check failed
    kExitUsage = 2,         // bad flags or arguments
    kExitRefused = 3,       // computation refused
};

// Runs the tool on args (without the program name). Output goes to out,
// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wg

#endif
