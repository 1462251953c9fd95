#ifndef STABENV_CLI_HPP
#define STABENV_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace stabenv {

/// Runs the command line given as argv-style arguments (program name not
/// included).  Exit status: 0 success / all checks pass, 1 verification
/// failure or no solution, 2 usage error.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabenv

#endif
