#ifndef SOSQ_CLI_HPP
#define SOSQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sosq {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` (or the --out file), diagnostics to `err`. Returns the exit code:
/// 0 success/PASS, 1 FAIL or violation, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sosq

#endif // SOSQ_CLI_HPP
