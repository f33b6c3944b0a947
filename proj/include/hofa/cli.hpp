#ifndef HOFA_CLI_HPP
#define HOFA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hofa {

/// Runs the CLI. Exit codes: 0 success, 1 verification failure, 2 usage or
/// input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hofa

#endif
