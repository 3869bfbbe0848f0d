#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mvsr {

struct ToolConfig {
  std::uint64_t max_carrier = 4096;
  std::uint64_t max_enum = 10'000'000;
  std::uint64_t seed = 42;
  std::size_t n_max = 2;
  std::optional<std::string> out;
};

/// Reads max_carrier, max_enum, seed, n_max and out from a JSON object; other
/// keys are rejected. Throws ParseError.
ToolConfig config_from_file(const std::string& path);

enum ExitCode : int {
  ExitOk = 0,
  ExitUsage = 1,
  ExitLawViolation = 2,
  ExitGuard = 3,
};

/// args excludes the program name. MVSR_CONFIG is consulted first, then the
/// flags. Reports go to --out when given, else to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mvsr
