#pragma once
// Monte Carlo ensembles and parameter sweeps.
//
// Trial t of a config point gets seed
//   derive_trial_seed(master_seed, point.hash(), t)
// so counts do not depend on how trials are scheduled across threads.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tint/category.hpp"
#include "tint/exploration.hpp"

namespace tint {

// One cell of a sweep. `beta` is empty for hardmax.
struct ConfigPoint {
  Algorithm algorithm = Algorithm::object_based;
  PolicyKind policy = PolicyKind::hardmax;
  DistanceMetric metric = DistanceMetric::squared;
  std::optional<double> beta;

  SelectionPolicy selection_policy() const;
  // e.g. "relation/softmax/squared/beta=0x1.4p+1"; hex float keeps it exact.
  std::string key() const;
  std::uint64_t hash() const;

  friend bool operator==(const ConfigPoint&, const ConfigPoint&) = default;
};

struct TrialEnsemble {
  ConfigPoint point;
  std::size_t n_trials = 0;
  std::vector<ImageId> source_initials;
  std::vector<ImageId> target_initials;
  std::vector<std::string> source_labels;
  std::vector<std::string> target_labels;
  // counts[i * n_targets + j]: trials in which source_initials[i] mapped to
  // target_initials[j].
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> unmapped;   // per source initial
  std::vector<std::uint32_t> widths;     // per trial, in trial order

  std::size_t n_sources() const { return source_initials.size(); }
  std::size_t n_targets() const { return target_initials.size(); }
  std::uint64_t count(std::size_t i, std::size_t j) const {
    return counts[i * n_targets() + j];
  }
};

// `base` supplies algorithm, policy, metric, setup and flags; its rng_seed is
// ignored. threads == 0 means one thread per hardware core.
TrialEnsemble run_ensemble(const LatentCategory& latent, const TrialConfig& base,
                           std::size_t n_trials, std::uint64_t master_seed,
                           unsigned threads = 1);

struct SweepSpec {
  std::vector<double> betas;
  std::vector<Algorithm> algorithms{Algorithm::object_based, Algorithm::relation_based};
  std::vector<PolicyKind> policies{PolicyKind::hardmax, PolicyKind::softmax};
  std::vector<DistanceMetric> metrics{DistanceMetric::squared};
  std::size_t n_trials = 10000;
  std::uint64_t master_seed = 0;
  bool softmax_conflict_resolution = false;

  // Throws InputError on empty dimensions, n_trials == 0 or a bad beta.
  void validate() const;
  // Cartesian product, hardmax collapsed to a single point per
  // (algorithm, metric). Order: algorithm, metric, policy, beta.
  std::vector<ConfigPoint> points() const;
};

struct SweepEntry {
  ConfigPoint point;
  TrialEnsemble ensemble;
};

std::vector<SweepEntry> run_sweep(const LatentCategory& latent,
                                  const MetaphorSetup& setup, const SweepSpec& spec,
                                  unsigned threads = 1);

// n points log-spaced over [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, std::size_t n);

// 21 points over [0.1, 100].
std::vector<double> default_beta_grid();

}  // namespace tint
