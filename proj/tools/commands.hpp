#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "bluescheme/congruence.hpp"

namespace bluescheme::cli {

/// Exit codes shared by all subcommands. Diagnostics go to the error
/// stream, data to the output stream.
enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kParseError = 2,
  kEnumerationGuard = 3,
  kUngradedInput = 4,
  kUnknownGenerator = 5,
  kNonPrimeModulus = 6,
};

struct CommandOptions {
  std::optional<std::string> builtin;
  std::optional<std::string> file;
  std::optional<std::string> dot_path;
  std::optional<std::string> json_path;
  std::optional<std::string> at;
  std::vector<std::uint64_t> qs;
  std::uint32_t budget = kDefaultSaturationDepth;
};

int run_spec(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_proj(const CommandOptions& opts, std::ostream& out, std::ostream& err);
int run_chart(const CommandOptions& opts, std::ostream& out,
              std::ostream& err);
int run_count(const CommandOptions& opts, std::ostream& out,
              std::ostream& err);

}  // namespace bluescheme::cli
