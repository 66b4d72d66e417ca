// locan: irreducibility checks for locally analytic principal series and the
// supporting Weyl-group and p-adic computations.

#include "locan/cli/config.hpp"
#include "locan/cli/report.hpp"
#include "locan/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

enum ExitCode { kOk = 0, kConfigError = 1, kResourceCap = 2 };

}  // namespace

int main(int argc, char** argv) {
  using namespace locan::cli;

  CLI::App app{"locan: Verma-module simplicity, Weyl combinatorics and p-adic demos"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", library_version());

  std::string config_path;
  std::string variant_text;
  std::string format_text = "text";
  std::optional<int> oracle_bound;
  app.add_option("--config", config_path, "problem description (key = value)")->required();
  app.add_option("--variant", variant_text, "delta-only | all-positive | both")
      ->check(CLI::IsMember({"delta-only", "all-positive", "both"}));
  app.add_option("--oracle-bound", oracle_bound, "degree bound for the singular-vector oracle")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", format_text, "text | machine")->check(CLI::IsMember({"text", "machine"}));

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"check", "criterion verdict and singular-vector oracle"},
      {"cosets", "double cosets W_I \\ W / W_J"},
      {"partition", "Iwahori root partition for (I, w)"},
      {"weights", "weight-space dimensions of a Verma module"},
      {"mahler", "Mahler coefficients of a function on a grid"},
      {"norm", "r-norms of truncated series and p-valuations"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  RunOptions options;
  options.command = *parse_command(app.get_subcommands().front()->get_name());
  if (!variant_text.empty()) options.variant = parse_variant_choice(variant_text);
  options.oracle_bound = oracle_bound;
  const Format format = format_text == "machine" ? Format::Machine : Format::Text;

  std::ifstream in(config_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read config " << config_path << "\n";
    return kConfigError;
  }
  std::ostringstream text;
  text << in.rdbuf();

  try {
    const ProblemConfig config = parse_config(text.str());
    std::cout << render(run(config, options), format);
    return kOk;
  } catch (const locan::ConfigError& e) {
    std::cerr << "config error in " << config_path << ":\n";
    for (const auto& issue : e.issues()) {
      std::cerr << "  ";
      if (issue.line > 0) std::cerr << "line " << issue.line << ": ";
      std::cerr << issue.message << "\n";
    }
    return kConfigError;
  } catch (const locan::ResourceError& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kResourceCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const locan::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kConfigError;
  }
}
