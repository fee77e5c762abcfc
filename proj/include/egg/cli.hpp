#ifndef EGG_CLI_HPP
#define EGG_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace egg::cli {

/// Command-line front end. Exit codes: 0 success / positive analysis,
/// 1 negative analysis (no equilibrium, no certificate, synthesis failure),
/// 2 input or usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace egg::cli

#endif
