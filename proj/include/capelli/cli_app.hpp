#ifndef CAPELLI_CLI_APP_HPP
#define CAPELLI_CLI_APP_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace capelli {

/// Runs the capelli CLI. Exit codes: 0 verified / success, 1 identity
/// mismatch or failed property, 2 usage, parse, or resource error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace capelli

#endif
