#include "tint/exploration.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tint/error.hpp"

namespace tint {

std::string_view to_string(Algorithm algorithm) {
  return algorithm == Algorithm::object_based ? "object" : "relation";
}

std::string_view to_string(DistanceMetric metric) {
  return metric == DistanceMetric::squared ? "squared" : "absolute";
}

Algorithm parse_algorithm(std::string_view text) {
  if (text == "object") return Algorithm::object_based;
  if (text == "relation") return Algorithm::relation_based;
  throw InputError("unknown algorithm '" + std::string(text) +
                   "' (expected object or relation)");
}

DistanceMetric parse_metric(std::string_view text) {
  if (text == "squared") return DistanceMetric::squared;
  if (text == "absolute") return DistanceMetric::absolute;
  throw InputError("unknown distance metric '" + std::string(text) +
                   "' (expected squared or absolute)");
}

double triangle_distance(const std::array<double, 3>& source,
                         const std::array<double, 3>& target,
                         DistanceMetric metric) {
  double d = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double diff = source[k] - target[k];
    d += metric == DistanceMetric::squared ? diff * diff : std::abs(diff);
  }
  return d;
}

void TrialConfig::validate(const LatentCategory& latent) const {
  validate_setup(latent, setup);
  policy.validate();
  if (setup.source_initials.empty() || setup.target_initials.empty()) {
    throw InputError("source and target initials must be non-empty");
  }
  if (algorithm == Algorithm::relation_based && setup.source_initials.size() < 2) {
    throw InputError("the relation-based algorithm needs at least two source initials");
  }
}

namespace {

// Mutable state of one comprehension episode.
class Trial {
 public:
  Trial(const LatentCategory& latent, const TrialConfig& config, TrialRngs& rng,
        bool trace)
      : latent_(latent),
        config_(config),
        rng_(rng),
        trace_(trace),
        outcome_{FunctorMap(config.setup.source_root, config.setup.target_root),
                 elicit_initial(latent, config.setup, config.algorithm),
                 {},
                 {}},
        decided_(latent.size() * latent.size(), false) {
    const MetaphorSetup& s = config.setup;
    add_metaphor_arrow(outcome_.elicited, s.target_root, s.source_root);
    bmf(outcome_.elicited, s.metaphor_arrow());
  }

  TrialOutcome run() && {
    if (config_.algorithm == Algorithm::object_based) {
      explore_objects();
    } else {
      explore_relations();
    }
    return std::move(outcome_);
  }

 private:
  // Whether the arrow is part of this trial's elicited category. An arrow not
  // yet present gets exactly one Bernoulli draw, the first time it is asked
  // about; the answer is then fixed for the rest of the trial.
  bool fires(Arrow a) {
    if (outcome_.elicited.contains(a)) return true;
    const std::size_t slot = static_cast<std::size_t>(a.dom) * latent_.size() + a.cod;
    if (decided_[slot]) return false;
    decided_[slot] = true;
    const bool hit = bernoulli(rng_.elicitation, latent_.weight(a));
    outcome_.draws.push_back({a, hit});
    if (hit) outcome_.elicited.elicit(a, ArrowOrigin::latent);
    return hit;
  }

  std::size_t choose(SelectionEvent::Stage stage, std::vector<Candidate> candidates,
                     Direction direction) {
    const std::size_t chosen =
        select(candidates, config_.policy, direction, rng_.selection);
    if (trace_) {
      outcome_.selections.push_back(
          {stage, direction, std::move(candidates), chosen});
    }
    return chosen;
  }

  void explore_objects() {
    const MetaphorSetup& s = config_.setup;
    for (ImageId b : s.source_initials) {
      std::vector<Candidate> candidates;
      for (ImageId a : s.target_initials) {
        if (fires({b, a})) candidates.push_back({a, latent_.weight(b, a)});
      }
      if (candidates.empty()) continue;  // b stays unmapped
      const auto a = static_cast<ImageId>(
          choose(SelectionEvent::Stage::object, std::move(candidates),
                 Direction::maximize));
      outcome_.functor.assign(
          {b, a, latent_.weight(b, a), Correspondence::Via::object, 0.0});
    }
  }

  struct Tentative {
    std::size_t triangle;
    ImageId target;
    double distance;
  };

  void explore_relations() {
    const MetaphorSetup& s = config_.setup;
    const ImageId B = s.source_root;
    const ImageId A = s.target_root;

    // Candidate ids are positions in this (id_i, id_j)-ordered list, so the
    // hardmax tie rule prefers the lowest image ids.
    std::vector<ImageId> targets = s.target_initials;
    std::sort(targets.begin(), targets.end());
    std::vector<std::pair<ImageId, ImageId>> target_pairs;
    for (ImageId i : targets) {
      for (ImageId j : targets) {
        if (i != j) target_pairs.emplace_back(i, j);
      }
    }

    std::vector<std::vector<Tentative>> tentative(latent_.size());
    std::size_t triangle = 0;
    for (ImageId p : s.source_initials) {
      for (ImageId q : s.source_initials) {
        if (p == q) continue;
        const std::size_t t = triangle++;

        for (ImageId a : targets) fires({p, a});
        for (ImageId a : targets) fires({q, a});

        const std::array<double, 3> source_mu{latent_.weight(B, p),
                                              latent_.weight(B, q),
                                              latent_.weight(p, q)};
        std::vector<Candidate> candidates;
        for (std::size_t k = 0; k < target_pairs.size(); ++k) {
          const auto [i, j] = target_pairs[k];
          if (!outcome_.elicited.contains({p, i}) ||
              !outcome_.elicited.contains({q, j})) {
            continue;
          }
          const std::array<double, 3> target_mu{
              latent_.weight(A, i), latent_.weight(A, j), latent_.weight(i, j)};
          candidates.push_back(
              {k, triangle_distance(source_mu, target_mu, config_.metric)});
        }
        if (candidates.empty()) continue;

        const std::size_t k = choose(SelectionEvent::Stage::triangle,
                                     candidates, Direction::minimize);
        double d = 0.0;
        for (const Candidate& c : candidates) {
          if (c.id == k) d = c.score;
        }
        tentative[p].push_back({t, target_pairs[k].first, d});
        tentative[q].push_back({t, target_pairs[k].second, d});
      }
    }

    const bool stochastic_conflicts = config_.softmax_conflict_resolution &&
                                      config_.policy.kind == PolicyKind::softmax;
    for (ImageId b : s.source_initials) {
      const auto& options = tentative[b];
      if (options.empty()) continue;
      std::size_t pick = 0;
      if (stochastic_conflicts) {
        std::vector<Candidate> candidates;
        for (std::size_t k = 0; k < options.size(); ++k) {
          candidates.push_back({k, options[k].distance});
        }
        pick = choose(SelectionEvent::Stage::conflict, std::move(candidates),
                      Direction::minimize);
      } else {
        // options are already in triangle order, so strict < keeps the
        // lowest triangle index on ties.
        for (std::size_t k = 1; k < options.size(); ++k) {
          if (options[k].distance < options[pick].distance) pick = k;
        }
      }
      const Tentative& chosen = options[pick];
      outcome_.functor.assign({b, chosen.target, latent_.weight(b, chosen.target),
                               Correspondence::Via::triangle, chosen.distance});
    }
  }

  const LatentCategory& latent_;
  const TrialConfig& config_;
  TrialRngs& rng_;
  bool trace_;
  TrialOutcome outcome_;
  std::vector<bool> decided_;
};

}  // namespace

TrialOutcome run_trial(const LatentCategory& latent, const TrialConfig& config,
                       bool trace) {
  config.validate(latent);
  TrialRngs rng(config.rng_seed);
  return Trial(latent, config, rng, trace).run();
}

FunctorMap explore_object_based(const LatentCategory& latent,
                                const TrialConfig& config, TrialRngs& rng) {
  config.validate(latent);
  if (config.algorithm != Algorithm::object_based) {
    throw InputError("explore_object_based called with a relation-based config");
  }
  return Trial(latent, config, rng, false).run().functor;
}

FunctorMap explore_relation_based(const LatentCategory& latent,
                                  const TrialConfig& config, TrialRngs& rng) {
  config.validate(latent);
  if (config.algorithm != Algorithm::relation_based) {
    throw InputError("explore_relation_based called with an object-based config");
  }
  return Trial(latent, config, rng, false).run().functor;
}

}  // namespace tint
