#pragma once

/**
 * Command-line front end: `expand`, `compare` and `laws`.
 *
 * Exit codes: 0 success, 1 disagreement or failing law, 2 parse or
 * evaluation error, 64 invalid configuration.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace taylor {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_config_error = 64;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string expr;
  /// Comma-separated scalars.
  std::string point;
  /// Direction vectors u_1..u_k separated by ';', each comma-separated. For
  /// one-variable maps a plain comma list gives u_1, u_2, ... directly.
  /// Unset means u_1 = all ones and the rest zero.
  std::optional<std::string> jet;
  std::size_t order = 2;
  std::string method = "operational";
  std::string scalar = "rational";
  /// Falls back to TAYLOR_SEED, then 1.
  std::optional<std::uint64_t> seed;
  std::string output = "text";

  std::string laws_filter;
  std::size_t cases = 100;
  bool inject_fault = false;
};

int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace taylor
