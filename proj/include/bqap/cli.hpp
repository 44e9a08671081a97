#ifndef BQAP_CLI_HPP
#define BQAP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bqap::cli {

/// Runs the command line given by args (without the program name), writing
/// regular output to out and diagnostics to err.
///
/// Exit codes: 0 success, 1 verification failure, 2 invalid arguments or
/// malformed files, 3 enumeration limit exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bqap::cli

#endif  // BQAP_CLI_HPP
