#include "tint/selection.hpp"

#include <cmath>
#include <string>

#include "tint/error.hpp"

namespace tint {

void SelectionPolicy::validate() const {
  if (kind == PolicyKind::softmax && !(std::isfinite(beta) && beta >= 0.0)) {
    throw InputError("softmax beta must be finite and non-negative, got " +
                     std::to_string(beta));
  }
}

namespace {

void check_candidates(std::span<const Candidate> candidates) {
  if (candidates.empty()) throw Error("select: empty candidate list");
  for (const Candidate& c : candidates) {
    if (!std::isfinite(c.score)) {
      throw Error("select: candidate " + std::to_string(c.id) +
                  " has a non-finite score");
    }
  }
}

bool better(const Candidate& a, const Candidate& b, Direction direction) {
  if (a.score != b.score) {
    return direction == Direction::maximize ? a.score > b.score
                                            : a.score < b.score;
  }
  return a.id < b.id;
}

std::size_t best_index(std::span<const Candidate> candidates, Direction direction) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (better(candidates[i], candidates[best], direction)) best = i;
  }
  return best;
}

// Unnormalized Boltzmann weights, shifted so the best candidate has weight 1.
std::vector<double> boltzmann_weights(std::span<const Candidate> candidates,
                                      double beta, Direction direction) {
  const double best = candidates[best_index(candidates, direction)].score;
  const double sign = direction == Direction::maximize ? 1.0 : -1.0;
  std::vector<double> w(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    w[i] = beta == 0.0 ? 1.0 : std::exp(sign * beta * (candidates[i].score - best));
  }
  return w;
}

}  // namespace

std::vector<double> selection_probabilities(std::span<const Candidate> candidates,
                                            const SelectionPolicy& policy,
                                            Direction direction) {
  check_candidates(candidates);
  policy.validate();
  std::vector<double> p(candidates.size(), 0.0);
  if (policy.kind == PolicyKind::hardmax) {
    p[best_index(candidates, direction)] = 1.0;
    return p;
  }
  p = boltzmann_weights(candidates, policy.beta, direction);
  double total = 0.0;
  for (double w : p) total += w;
  for (double& w : p) w /= total;
  return p;
}

std::size_t select(std::span<const Candidate> candidates,
                   const SelectionPolicy& policy, Direction direction, Rng& rng) {
  check_candidates(candidates);
  policy.validate();
  if (policy.kind == PolicyKind::hardmax || candidates.size() == 1) {
    return candidates[best_index(candidates, direction)].id;
  }

  const auto w = boltzmann_weights(candidates, policy.beta, direction);
  double total = 0.0;
  for (double x : w) total += x;
  const double u = uniform01(rng) * total;
  double cumulative = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] <= 0.0) continue;
    cumulative += w[i];
    last_positive = i;
    if (u < cumulative) return candidates[i].id;
  }
  return candidates[last_positive].id;
}

std::string_view to_string(PolicyKind kind) {
  return kind == PolicyKind::hardmax ? "hardmax" : "softmax";
}

PolicyKind parse_policy_kind(std::string_view text) {
  if (text == "hardmax") return PolicyKind::hardmax;
  if (text == "softmax") return PolicyKind::softmax;
  throw InputError("unknown selection policy '" + std::string(text) +
                   "' (expected hardmax or softmax)");
}

}  // namespace tint
