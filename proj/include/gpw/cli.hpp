#ifndef GPW_CLI_HPP
#define GPW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gpw {

/// Runs one CLI invocation (without the program name). Returns the process
/// exit status: 0 on success, 1 when verify-paper finds failures, 2 on
/// parse or configuration errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gpw

#endif  // GPW_CLI_HPP
