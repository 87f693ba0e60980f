#ifndef HOMSUPER_CLI_RUN_HPP
#define HOMSUPER_CLI_RUN_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace homsuper {

// The full command-line driver, without the program name. Exit codes:
// 0 success (for verify: the axioms hold), 1 axiom failure or domain error,
// 2 unreadable input or usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homsuper

#endif
