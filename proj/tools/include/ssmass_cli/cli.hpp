#ifndef SSMASS_CLI_CLI_HPP
#define SSMASS_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ssmass::cli {

/// Exit codes: 0 success, 1 invalid input, 2 internal-consistency failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ssmass::cli

#endif  // SSMASS_CLI_CLI_HPP
