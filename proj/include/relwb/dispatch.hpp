#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "relwb/relation_io.hpp"

namespace relwb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

struct RunConfig {
  std::string subcommand;
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> event;
  std::optional<std::filesystem::path> output;
  std::optional<std::filesystem::path> json;
  std::size_t size = 4;
  std::size_t count = 100;
  std::size_t n = 2;
  std::optional<std::uint64_t> seed;
  bool audit = false;
  std::string expression;
};

struct RunResult {
  int exitCode = kExitOk;
  std::string text;
  Json report;
};

/// Executes one subcommand. Input problems raise ParseError; failed checks
/// are reported through exitCode.
RunResult dispatch(const RunConfig& config);

/// Parses argv, runs dispatch and writes both reports. The text report
/// goes to --output (or `out`); the JSON report goes to --json, else to
/// "<output>.json", else to `out` after the text.
int runCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace relwb::cli
