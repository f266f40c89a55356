#pragma once
// Reproducible randomness.
//
// Every trial gets a 64-bit seed derived from (master seed, config-point hash,
// trial index) with SplitMix64 finalizers. Two independent mt19937_64 streams
// are then derived from the trial seed: one for Bernoulli elicitation draws
// and one for selection. Keeping them apart means a hardmax and a softmax
// trial with the same seed see the same elicited arrows.
//
// Uniform variates are built from the raw 64-bit output (top 53 bits), not
// std::uniform_real_distribution, so results do not depend on the standard
// library implementation.

#include <cstdint>
#include <random>
#include <string_view>

namespace tint {

using Rng = std::mt19937_64;

std::uint64_t splitmix64(std::uint64_t x);

// FNV-1a over bytes; stable across platforms, used for config-point hashing.
std::uint64_t fnv1a64(std::string_view bytes);

std::uint64_t derive_trial_seed(std::uint64_t master_seed,
                                std::uint64_t point_hash,
                                std::uint64_t trial_index);

// Uniform double in [0, 1).
double uniform01(Rng& rng);

// True with probability p. p <= 0 never fires, p >= 1 always fires.
bool bernoulli(Rng& rng, double p);

struct TrialRngs {
  explicit TrialRngs(std::uint64_t trial_seed);

  Rng elicitation;
  Rng selection;
};

}  // namespace tint
