#ifndef NHTOPO_CLI_HPP
#define NHTOPO_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nhtopo {

/// Runs the command-line tool on the given arguments (program name excluded).
/// Returns the process exit code: 0 on success, 1 on a domain error, 2 on a
/// parse or usage error. All output is deterministic.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nhtopo

#endif // NHTOPO_CLI_HPP
