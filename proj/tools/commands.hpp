#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

#include "manifest.hpp"
#include "tint/category.hpp"
#include "tint/ingestion.hpp"

namespace tint::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitRuntimeFailure = 2;

// Command-line values that take precedence over manifest keys.
struct Overrides {
  std::optional<std::filesystem::path> out;
  std::optional<unsigned> threads;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> beta_grid;
};

void apply_overrides(RunManifest& manifest, const Overrides& overrides);

struct Inputs {
  LatentCategory latent;
  MetaphorSetup setup;
  InterpretationData human;
  SimilarityMatrix similarity;
};

// Loads and cross-checks every input named by the manifest.
Inputs load_inputs(const RunManifest& manifest);

struct TrialRequest {
  Algorithm algorithm = Algorithm::relation_based;
  PolicyKind policy = PolicyKind::hardmax;
  DistanceMetric metric = DistanceMetric::squared;
  double beta = 1.0;
  std::uint64_t seed = 0;
  bool softmax_conflict_resolution = false;
};

int cmd_validate(const RunManifest& manifest, std::ostream& out);
int cmd_run(const RunManifest& manifest, std::ostream& out);
int cmd_trial(const RunManifest& manifest, const TrialRequest& request, std::ostream& out);

// Runs `command`, reporting exceptions on `err` and mapping them to exit
// codes: InputError -> 1, anything else -> 2.
int guarded(const std::function<int()>& command, std::ostream& err);

}  // namespace tint::cli
