#ifndef MHG_CLI_HPP
#define MHG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace mhg::cli {

/// Exit statuses.
enum Status : int { kOk = 0, kViolated = 1, kInvalidInput = 2, kResourceLimit = 3 };

int run(int argc, char** argv, std::ostream& out, std::ostream& err);
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mhg::cli

#endif  // MHG_CLI_HPP
