// The strata command line: models, presup, repl, check.
//
// Exit status: 0 satisfiable (or parse ok), 1 usage/parse/budget error,
// 2 theory has no model.

#ifndef STRATA_CLI_HPP
#define STRATA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace strata {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnsatisfiable = 2;

inline constexpr const char* kUnsatisfiableMessage = "theory has no model (utterance interpreted as false)";

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace strata

#endif  // STRATA_CLI_HPP
