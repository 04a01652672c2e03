#ifndef VALENCE_CLI_HPP_
#define VALENCE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace valence::cli {

  // Exit codes. Verdict-bearing commands exit with kYes / kNo /
  // kUndetermined; the rest exit kYes on success.
  inline constexpr int kYes          = 0;
  inline constexpr int kNo           = 1;
  inline constexpr int kUndetermined = 2;
  inline constexpr int kUsage        = 64;  // unknown command, bad flags
  inline constexpr int kDataError    = 65;  // unreadable or invalid input

  // args[0] is the command name (argv without the program name).
  int run_command(std::vector<std::string> const& args,
                  std::ostream&                   out,
                  std::ostream&                   err);

}  // namespace valence::cli

#endif  // VALENCE_CLI_HPP_
