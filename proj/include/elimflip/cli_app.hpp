#ifndef ELIMFLIP_CLI_APP_HPP
#define ELIMFLIP_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace elimflip {

/// Run the command-line tool on the given arguments (program name excluded).
/// JSON results go to out, diagnostics to err. Returns the process exit
/// code: 0 success, 1 domain error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elimflip

#endif
