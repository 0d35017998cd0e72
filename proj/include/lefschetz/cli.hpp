#ifndef LEFSCHETZ_CLI_HPP
#define LEFSCHETZ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lefschetz {

/// Runs the command line `args` (program name excluded). Returns 0 on success,
/// 1 on a domain error and 2 on a usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lefschetz

#endif  // LEFSCHETZ_CLI_HPP
