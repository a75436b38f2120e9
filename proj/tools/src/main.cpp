#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "fusionkit/error.hpp"

using namespace fusionkit;
using namespace fusionkit::cli;

namespace {

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& format) {
  cmd->add_option("--pair", cfg.pairs, "pair spec pair:(G,H,p); repeatable");
  cmd->add_option("--spec", cfg.specs, "group spec; repeatable");
  cmd->add_option("--prime", cfg.prime, "prime for --spec and --n-range");
  cmd->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  cmd->add_option("--out", cfg.out, "write the report here instead of stdout");
  cmd->add_option("--max-order", cfg.caps.max_group_order, "group order cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-subgroups", cfg.caps.max_subgroups, "subgroup count cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--functor-cap", cfg.caps.functor_candidates, "functor candidate cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--time-budget-secs", cfg.time_budget_secs,
                  "stop starting new items after this many seconds")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--workers", cfg.workers, "parallel items")->check(CLI::PositiveNumber);
  cmd->add_flag("--widen", cfg.widen, "take T-centric subgroups of S, not only of T");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fusionkit: fusion and linking systems of finite groups"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";

  auto* analyze = app.add_subcommand("analyze", "classify pairs and compute C_S(E)");
  add_common(analyze, cfg, format);
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, cfg, format);
  verify->add_option("--suite", cfg.suite, "suite name")
      ->required()
      ->check(CLI::IsMember({"theorem-a", "theorem-b", "local", "op-containment", "gross",
                             "hyperfocal", "zstar", "example"}));
  auto* conjecture = app.add_subcommand("conjecture", "run a conjecture experiment");
  add_common(conjecture, cfg, format);
  conjecture->add_option("--which", cfg.which, "5.2 or 5.3")
      ->required()
      ->check(CLI::IsMember({"5.2", "5.3"}));
  conjecture->add_option("--n-range", cfg.n_range, "symmetric/alternating pairs, e.g. 6..7");

  // flags parsed below take precedence over the environment
  try {
    if (char const* env = std::getenv("FUSIONKIT_CAPS"); env && *env) {
      apply_caps_json(cfg.caps, env);
    }
  } catch (std::exception const& e) {
    std::cerr << "fusionkit: " << e.what() << "\n";
    return 2;
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  cfg.format = format == "md" ? Format::markdown : Format::json;

  try {
    Report report;
    if (*analyze) {
      report = cmd_analyze(cfg);
    } else if (*verify) {
      report = cmd_verify(cfg);
    } else {
      report = cmd_conjecture(cfg);
    }
    std::string const text = cfg.format == Format::json ? report_json(report).dump(2) + "\n"
                                                        : render_markdown(report);
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out) throw Error("cannot write " + cfg.out);
      out << text;
    }
    return exit_code(report);
  } catch (std::exception const& e) {
    std::cerr << "fusionkit: " << e.what() << "\n";
    return 2;
  }
}
