#pragma once
// Natural-transformation search from the base-of-metaphor functor.
//
// Object-based: each source initial B_i looks at the target initials A_j
// whose arrow B_i->A_j fires (one Bernoulli draw on its latent weight) and
// picks one by weight.
//
// Relation-based: for every ordered pair (B_p, B_q) of source initials, the
// source triangle (B->B_p, B->B_q, B_p->B_q) is matched against the target
// triangles (A->A_i, A->A_j, A_i->A_j) reachable through fired cross arrows
// B_p->A_i and B_q->A_j, choosing by triangle distance. A source image that
// collects several tentative correspondences keeps the one with the smallest
// distance.

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tint/category.hpp"
#include "tint/random.hpp"
#include "tint/selection.hpp"

namespace tint {

enum class DistanceMetric { squared, absolute };

std::string_view to_string(Algorithm algorithm);
std::string_view to_string(DistanceMetric metric);
Algorithm parse_algorithm(std::string_view text);
DistanceMetric parse_metric(std::string_view text);

// Weights are ordered (root->first, root->second, first->second).
double triangle_distance(const std::array<double, 3>& source,
                         const std::array<double, 3>& target,
                         DistanceMetric metric);

struct TrialConfig {
  Algorithm algorithm = Algorithm::object_based;
  SelectionPolicy policy;
  DistanceMetric metric = DistanceMetric::squared;
  std::uint64_t rng_seed = 0;
  MetaphorSetup setup;
  // Resolve competing tentative correspondences with `policy` instead of
  // always keeping the smallest distance. Relation-based only.
  bool softmax_conflict_resolution = false;

  // Throws InputError: empty initials, fewer than two source initials for
  // the relation-based algorithm, bad beta, or an invalid setup.
  void validate(const LatentCategory& latent) const;
};

struct ElicitationDraw {
  Arrow arrow;
  bool elicited;
};

// One call to select() during a trial, kept for diagnostics and tests.
struct SelectionEvent {
  enum class Stage { object, triangle, conflict };

  Stage stage;
  Direction direction;
  std::vector<Candidate> candidates;
  std::size_t chosen;
};

struct TrialOutcome {
  FunctorMap functor;
  ElicitedCategory elicited;
  std::vector<ElicitationDraw> draws;     // every Bernoulli draw, in order
  std::vector<SelectionEvent> selections;  // empty unless tracing
};

// Runs one full comprehension episode: initial elicitation, metaphor arrow,
// BMF, then the configured search. Seeds its streams from config.rng_seed.
TrialOutcome run_trial(const LatentCategory& latent, const TrialConfig& config,
                       bool trace = false);

FunctorMap explore_object_based(const LatentCategory& latent,
                                const TrialConfig& config, TrialRngs& rng);
FunctorMap explore_relation_based(const LatentCategory& latent,
                                  const TrialConfig& config, TrialRngs& rng);

}  // namespace tint
