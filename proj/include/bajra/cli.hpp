#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bajra::cli {

enum class Subcommand { Mean, Effort, Synergy, Select, Coalition, Hull, Equality, Check };
enum class OutputFormat { Plain, Json, Csv };

std::optional<Subcommand> parse_subcommand(std::string_view name) noexcept;
std::optional<OutputFormat> parse_format(std::string_view name) noexcept;

struct RunConfig {
  Subcommand subcommand = Subcommand::Mean;
  std::string map_spec;
  /// Second map for `equality`.
  std::string other_map_spec;
  /// Inline JSON (starts with '{') or a file path.
  std::string input;
  std::vector<double> weights;
  double quota = 51.0;
  double total = 100.0;
  std::string rule;
  /// Falls back to $BAJRA_SEED, then 42.
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::optional<double> tol;
  OutputFormat format = OutputFormat::Plain;
  bool strict_preference = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNumeric = 2;
inline constexpr int kExitPropertyFailure = 3;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag);

/// Runs one subcommand, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace bajra::cli
