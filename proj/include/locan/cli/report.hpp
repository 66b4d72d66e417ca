#pragma once

#include "locan/cli/config.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace locan::cli {

enum class Command { Check, Cosets, Partition, Weights, Mahler, Norm };

const char* command_name(Command c);
std::optional<Command> parse_command(std::string_view text);

enum class Format { Text, Machine };

/// The main theorem only yields "simple => irreducible", so there is no
/// value for a reducible representation.
enum class Verdict { Irreducible, Inconclusive };

const char* verdict_name(Verdict v);

struct RunOptions {
  Command command = Command::Check;
  std::optional<VariantChoice> variant;  // overrides the config
  std::optional<int> oracle_bound;       // overrides the config
};

/// Oracle bound used when the all-positive criterion predicts no singular
/// weight and none is configured.
inline constexpr int kFallbackOracleBound = 6;

struct Report {
  Command command = Command::Check;
  std::optional<Verdict> verdict;  // set by `check`
  nlohmann::ordered_json body;     // sections in fixed order
};

const char* library_version();

/// Throws ConfigError when the config lacks what the command needs,
/// ResourceError when a cap is hit, DomainError/UnsupportedError from the
/// underlying modules.
Report run(const ProblemConfig& config, const RunOptions& options);

/// Byte-deterministic for a fixed report. Machine format is JSON with
/// the same field order as the text layout.
std::string render(const Report& report, Format format);

}  // namespace locan::cli
