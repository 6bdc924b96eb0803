#include "hopfchern/commands.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using namespace hopfchern::cli;

constexpr int kExitConfig = 2;

void setup_logging() {
  auto logger = spdlog::stderr_logger_mt("hopfchern");
  logger->set_pattern("[%l] %v");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  const char* env = std::getenv("LOG_LEVEL");
  if (env == nullptr) return;
  const std::string level = env;
  if (level == "error" || level == "warn" || level == "info" || level == "debug") {
    spdlog::set_level(spdlog::level::from_str(level));
  } else {
    spdlog::warn("ignoring unknown LOG_LEVEL '{}'", level);
  }
}

struct RawOptions {
  std::string family = "heegaard";
  std::string mu = "-2..2";
  std::string mode = "exact";
  std::string format = "text";
  std::string verify;
  std::map<std::string, bool> suite_flags;
};

void add_common(CLI::App* cmd, RunConfig& config, RawOptions& raw) {
  cmd->add_option("--family", raw.family, "heegaard or podles")->capture_default_str();
  cmd->add_option("--mu", raw.mu, "winding numbers, A..B or a single integer")->capture_default_str();
  cmd->add_option("--s", config.s_text, "podles parameter: a rational in [0,1] or 'symbolic'")->capture_default_str();
  cmd->add_option("--format", raw.format, "json, csv or text")->capture_default_str();
  cmd->add_option("--out", config.out, "write the report to FILE instead of stdout");
  cmd->add_option("--jobs", config.jobs, "parallel workers over mu")->capture_default_str();
  cmd->add_option("--time-budget-secs", config.time_budget_secs, "per-mu limit for symbolic s")->capture_default_str();
  cmd->add_flag("--timings", config.timings, "include elapsed times in the report metadata");
}

int finish(int (*command)(const RunConfig&, std::ostream&), const RunConfig& config) {
  if (config.out.empty()) return command(config, std::cout);
  std::ofstream file(config.out);
  if (!file) {
    spdlog::error("cannot open {}", config.out);
    return kExitConfig;
  }
  return command(config, file);
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();

  CLI::App app{"Exact Chern numbers of line bundles over quantum spheres"};
  app.set_version_flag("--version", HOPFCHERN_VERSION);
  app.require_subcommand(1);

  RunConfig config;
  RawOptions raw;

  auto* chern = app.add_subcommand("chern", "pair each line bundle with its Fredholm module");
  add_common(chern, config, raw);
  chern->add_option("--mode", raw.mode, "exact, numeric or both")->capture_default_str();
  chern->add_option("--p", config.p_text, "numeric p in ]0,1[")->capture_default_str();
  chern->add_option("--q", config.q_text, "numeric q in ]0,1[")->capture_default_str();
  chern->add_option("--truncation", config.truncation, "levels summed numerically")->capture_default_str();
  CLI::Option* verify_opt =
      chern->add_option("--verify", raw.verify, "also run these suites (comma list; bare flag runs all)")
          ->expected(0, 1);

  auto* verify = app.add_subcommand("verify", "run verification suites (all when none is selected)");
  add_common(verify, config, raw);
  verify->add_option("--degree", config.degree, "quotient truncation degree")->capture_default_str();
  for (const auto& suite : verify_suites()) {
    verify->add_flag("--" + suite, raw.suite_flags[suite], "run the " + suite + " suite");
  }

  auto* table = app.add_subcommand("table", "(rank, chern) rows over the mu range");
  add_common(table, config, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    config.family = hopfchern::parse_family(raw.family);
    config.mu = parse_mu_range(raw.mu);
    config.mode = parse_mode(raw.mode);
    config.format = parse_format(raw.format);
    if (chern->parsed() && verify_opt->count() > 0) {
      config.verify = raw.verify.empty() ? verify_suites() : parse_verify_list(raw.verify);
    }
    if (verify->parsed()) {
      for (const auto& [suite, on] : raw.suite_flags) {
        if (on) config.verify.insert(suite);
      }
    }
    config.validate();
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitConfig;
  }

  try {
    if (chern->parsed()) return finish(cmd_chern, config);
    if (verify->parsed()) return finish(cmd_verify, config);
    return finish(cmd_table, config);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
}
