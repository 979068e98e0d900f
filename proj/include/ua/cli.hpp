#ifndef UA_CLI_HPP
#define UA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace ua::cli {

/// Exit codes: 0 success, 1 negative result (invalid term, not a
/// homomorphism, not a model), 2 usage, I/O or parse failure.
enum ExitCode : int { exit_ok = 0, exit_negative = 1, exit_malformed = 2 };

/// Runs one `ua` invocation. args excludes the program name. Reports go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ua::cli

#endif  // UA_CLI_HPP
