// tint: metaphor comprehension simulations over coslice categories.
//
//   tint validate --manifest M
//   tint run      --manifest M [--out DIR] [--threads N] [--seed U64] [--beta-grid lo:hi:n]
//   tint trial    --manifest M [--algorithm A] [--policy P] [--beta B] [--metric D] [--seed U64]
//
// Log level comes from TINT_LOG (trace, debug, info, warn, error, off); logs go
// to stderr so stdout stays deterministic.

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <iostream>

#include "commands.hpp"
#include "tint/exploration.hpp"

namespace {

void init_logging() {
  auto logger = spdlog::stderr_color_mt("tint");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("TINT_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tint::cli;
  init_logging();

  CLI::App app{"Indeterminate natural transformation search for metaphor comprehension"};
  app.require_subcommand(1);

  std::string manifest_path;
  Overrides overrides;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--manifest", manifest_path, "Run manifest (key = value file)")
        ->required()
        ->check(CLI::ExistingFile);
  };

  auto* validate = app.add_subcommand("validate", "Parse and check all inputs without running");
  add_common(validate);

  auto* run = app.add_subcommand("run", "Run the sweep and write results");
  add_common(run);
  run->add_option("--out", overrides.out, "Output directory");
  run->add_option("--threads", overrides.threads, "Worker threads (0 = all cores)");
  run->add_option("--seed", overrides.seed, "Master seed");
  run->add_option("--beta-grid", overrides.beta_grid, "Log-spaced beta grid lo:hi:n");

  TrialRequest request;
  std::string algorithm = "relation", policy = "hardmax", metric = "squared";
  auto* trial = app.add_subcommand("trial", "Run one trial and print the functor it finds");
  add_common(trial);
  trial->add_option("--algorithm", algorithm, "object or relation")->capture_default_str();
  trial->add_option("--policy", policy, "hardmax or softmax")->capture_default_str();
  trial->add_option("--beta", request.beta, "Softmax inverse temperature")->capture_default_str();
  trial->add_option("--metric", metric, "squared or absolute")->capture_default_str();
  trial->add_option("--seed", request.seed, "Trial seed")->capture_default_str();
  trial->add_flag("--softmax-conflicts", request.softmax_conflict_resolution,
                  "Resolve competing correspondences with softmax too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  return guarded(
      [&]() -> int {
        RunManifest manifest = load_manifest(manifest_path);
        apply_overrides(manifest, overrides);
        if (*validate) return cmd_validate(manifest, std::cout);
        if (*run) return cmd_run(manifest, std::cout);
        request.algorithm = tint::parse_algorithm(algorithm);
        request.policy = tint::parse_policy_kind(policy);
        request.metric = tint::parse_metric(metric);
        return cmd_trial(manifest, request, std::cout);
      },
      std::cerr);
}
