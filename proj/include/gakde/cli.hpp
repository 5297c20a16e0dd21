#ifndef GAKDE_CLI_HPP
#define GAKDE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gakde {

// Entry point shared by the gakde binary and the tests. Returns the
// process exit code: 0 success, 1 I/O or data error, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gakde

#endif
