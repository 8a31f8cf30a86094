#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace confspace::cli {

inline constexpr std::string_view kSchemaVersion = "1";

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2 };

struct CommandInfo {
  std::string_view name;
  /// Library operation (or fixed composition) behind the command.
  std::string_view operation;
  bool needs_config;
};

const std::vector<CommandInfo>& command_table();

/// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view data);

/// Runs one command. args excludes the program name. The JSON report goes to
/// out; diagnostics and the --pretty summary go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace confspace::cli
