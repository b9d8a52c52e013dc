#pragma once

// Subcommand implementations for the z4u tool. Each returns its stdout
// payload and exit code instead of printing, so they can be tested directly.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace z4u::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;  // data stream
  std::string err;  // diagnostics
};

struct CommonFlags {
  bool json = false;
  std::uint64_t seed = 42;
  bool force = false;
  bool no_distance = false;
  std::uint64_t budget = std::uint64_t{1} << 28;
  /// Print enumeration progress to stderr.
  bool progress = false;
};

CommandResult cmd_factor(std::size_t n, const CommonFlags& flags);

struct CodeArgs {
  std::size_t n = 0;
  std::string lambda = "1+2u";
  /// Raw generators of the R[x]-module.
  std::vector<std::string> generators;
  /// Shorthand for the generator pair <g1, u g2>.
  std::optional<std::string> g1;
  std::optional<std::string> g2;
};
CommandResult cmd_code_info(const CodeArgs& args, const CommonFlags& flags);

CommandResult cmd_table7(const CommonFlags& flags);

struct VerifyArgs {
  std::string property;
  /// "9", "1..25" or "3,5,7".
  std::string n = "7";
  std::uint64_t trials = 1000;
};
CommandResult cmd_verify(const VerifyArgs& args, const CommonFlags& flags);

struct GrayArgs {
  std::string a;
  std::string b;
  std::size_t n = 0;
  bool analyze = false;
};
CommandResult cmd_gray_generators(const GrayArgs& args, const CommonFlags& flags);

/// Parses "a..b" or comma-separated lists. Throws z4u::ParseError.
std::vector<std::size_t> parse_n_list(const std::string& text);

}  // namespace z4u::cli
