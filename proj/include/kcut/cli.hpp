#ifndef KCUT_CLI_HPP
#define KCUT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace kcut {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitInvariant = 3;
inline constexpr int kExitDisagreement = 4;

/// Entry point behind the `kcut` binary. `args` excludes the program name.
/// Subcommands: solve, oracle, gen, bench.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

/// Sets up the stderr logger from KCUT_LOG (error, info or debug).
void configure_logging();

}  // namespace kcut

#endif  // KCUT_CLI_HPP
