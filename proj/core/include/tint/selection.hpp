#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "tint/random.hpp"

namespace tint {

enum class PolicyKind { hardmax, softmax };

struct SelectionPolicy {
  PolicyKind kind = PolicyKind::hardmax;
  double beta = 0.0;  // inverse temperature, softmax only

  static SelectionPolicy hardmax() { return {PolicyKind::hardmax, 0.0}; }
  static SelectionPolicy softmax(double beta) { return {PolicyKind::softmax, beta}; }

  // Throws InputError if beta is negative or not finite.
  void validate() const;
};

enum class Direction { maximize, minimize };

struct Candidate {
  std::size_t id;
  double score;
};

// Probability of each candidate being selected, in candidate order.
// Hardmax puts all mass on the best score, ties going to the lowest id.
// Softmax is proportional to exp(beta*s) when maximizing and exp(-beta*s)
// when minimizing.
std::vector<double> selection_probabilities(std::span<const Candidate> candidates,
                                            const SelectionPolicy& policy,
                                            Direction direction);

// Returns the id of the selected candidate. Hardmax, and softmax over a
// single candidate, consume no randomness.
// Throws tint::Error on an empty candidate list or a non-finite score.
std::size_t select(std::span<const Candidate> candidates,
                   const SelectionPolicy& policy, Direction direction, Rng& rng);

std::string_view to_string(PolicyKind kind);
PolicyKind parse_policy_kind(std::string_view text);

}  // namespace tint
