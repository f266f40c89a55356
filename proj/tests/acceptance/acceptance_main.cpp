// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and seeds are fixed here and never tuned per run.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "manifest.hpp"
#include "oracles.hpp"
#include "tint/category.hpp"
#include "tint/evaluation.hpp"
#include "tint/exploration.hpp"
#include "tint/ingestion.hpp"
#include "tint/results_io.hpp"
#include "tint/selection.hpp"
#include "tint/simulation.hpp"

namespace {

using namespace tint;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSeed = 20241016;
constexpr std::size_t kTrials = 10000;
constexpr double kSigmas = 3.0;

struct Verdict {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Fixture {
  cli::RunManifest manifest;
  cli::Inputs inputs;

  static Fixture load() {
    auto m = cli::load_manifest(TINT_FIXTURE_DIR "/manifest.ini");
    auto in = cli::load_inputs(m);
    return {std::move(m), std::move(in)};
  }

  TrialConfig config(Algorithm algorithm, SelectionPolicy policy) const {
    TrialConfig c;
    c.algorithm = algorithm;
    c.policy = policy;
    c.setup = inputs.setup;
    return c;
  }
};

const Fixture& fixture() {
  static const Fixture f = Fixture::load();
  return f;
}

Verdict functor_laws() {
  const auto start = Clock::now();
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t violations = 0, objects = 0, squares = 0;
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 3 + rng() % 10;
    auto inst = testing::random_instance(rng, n, 1 + rng() % (n - 2), 1 + rng() % (n - 2), false);
    auto latent = inst.latent();
    const auto mode = round % 2 ? Algorithm::relation_based : Algorithm::object_based;
    auto e = elicit_initial(latent, inst.setup, mode);
    add_metaphor_arrow(e, inst.setup.target_root, inst.setup.source_root);
    for (ImageId i = 0; i < n; ++i) {
      for (ImageId j = 0; j < n; ++j) {
        if (unit(rng) < latent.weight(i, j)) e.elicit({i, j}, ArrowOrigin::latent);
      }
    }
    auto report = check_functor_laws(bmf(e, inst.setup.metaphor_arrow()), e);
    violations += report.violations.size();
    objects += report.objects_checked;
    squares += report.squares_checked;
  }
  const double t = seconds_since(start);
  std::ostringstream d;
  d << "1000 categories, " << objects << " objects, " << squares << " squares, " << violations
    << " violations, " << t << " s (limit 10 s)";
  return {violations == 0 && t < 10.0, d.str()};
}

Verdict elicitation_calibration() {
  const auto& f = fixture();
  const auto& latent = f.inputs.latent;
  std::size_t checked = 0, outside = 0;
  double worst = 0.0;
  std::string worst_arrow;
  for (auto alg : {Algorithm::object_based, Algorithm::relation_based}) {
    auto config = f.config(alg, SelectionPolicy::hardmax());
    std::map<Arrow, std::pair<std::size_t, std::size_t>> tally;  // draws, hits
    for (std::size_t t = 0; t < kTrials; ++t) {
      config.rng_seed = derive_trial_seed(kSeed, fnv1a64(to_string(alg)), t);
      for (const auto& d : run_trial(latent, config).draws) {
        auto& [draws, hits] = tally[d.arrow];
        ++draws;
        hits += d.elicited ? 1 : 0;
      }
    }
    for (const auto& [arrow, dh] : tally) {
      const double mu = latent.weight(arrow);
      const double n = static_cast<double>(dh.first);
      const double se = std::sqrt(mu * (1.0 - mu) / n);
      const double z = se > 0 ? std::abs(dh.second / n - mu) / se : 0.0;
      ++checked;
      if (z > kSigmas) ++outside;
      if (z > worst) {
        worst = z;
        worst_arrow = std::string(to_string(alg)) + " " + latent.label(arrow.dom) + "->" +
                      latent.label(arrow.cod);
      }
    }
  }
  std::ostringstream d;
  d << checked << " arrows, " << outside << " outside 3 SE, max |z| = " << worst << " ("
    << worst_arrow << ")";
  return {outside == 0 && checked > 0, d.str()};
}

Verdict softmax_limit() {
  const auto& f = fixture();
  const auto& latent = f.inputs.latent;
  std::ostringstream d;
  bool pass = true;

  // Elicitation and selection use separate streams, so the two runs of a
  // trial see the same candidate lists event by event.
  for (auto alg : {Algorithm::object_based, Algorithm::relation_based}) {
    auto hard = f.config(alg, SelectionPolicy::hardmax());
    auto soft = f.config(alg, SelectionPolicy::softmax(1000.0));
    std::size_t same = 0, events = 0, differing = 0, tied = 0;
    for (std::size_t t = 0; t < kTrials; ++t) {
      hard.rng_seed = soft.rng_seed = derive_trial_seed(kSeed, 1000, t);
      const auto h = run_trial(latent, hard, true);
      const auto s = run_trial(latent, soft, true);
      same += h.functor == s.functor ? 1 : 0;
      for (std::size_t k = 0; k < h.selections.size(); ++k) {
        ++events;
        const auto& he = h.selections[k];
        if (he.chosen == s.selections[k].chosen) continue;
        ++differing;
        double a = 0, b = 0;
        for (const auto& c : he.candidates) {
          if (c.id == he.chosen) a = c.score;
          if (c.id == s.selections[k].chosen) b = c.score;
        }
        tied += a == b ? 1 : 0;
      }
    }
    const double rate = static_cast<double>(same) / kTrials;
    pass = pass && rate >= 0.99;
    d << to_string(alg) << " beta=1000: " << rate * 100 << "% of trials match (" << differing
      << " of " << events << " selections differ, " << tied << " on exact ties); ";
  }

  // beta = 0: scores must be ignored. Two statistics over every selection
  // with k >= 2 candidates, each expected at sum(1/k): picks of the
  // best-scoring candidate and picks of the first-listed candidate.
  double expected = 0.0, variance = 0.0;
  std::size_t best_hits = 0, first_hits = 0, events = 0;
  for (auto alg : {Algorithm::object_based, Algorithm::relation_based}) {
    auto zero = f.config(alg, SelectionPolicy::softmax(0.0));
    for (std::size_t t = 0; t < kTrials; ++t) {
      zero.rng_seed = derive_trial_seed(kSeed, 0, t);
      const auto out = run_trial(latent, zero, true);
      for (const auto& e : out.selections) {
        const std::size_t k = e.candidates.size();
        if (k < 2) continue;
        const auto probs = selection_probabilities(e.candidates, SelectionPolicy::hardmax(),
                                                   e.direction);
        std::size_t best = 0;
        while (probs[best] != 1.0) ++best;
        const double p = 1.0 / static_cast<double>(k);
        expected += p;
        variance += p * (1.0 - p);
        ++events;
        best_hits += e.candidates[best].id == e.chosen ? 1 : 0;
        first_hits += e.candidates.front().id == e.chosen ? 1 : 0;
      }
    }
  }
  const double sd = std::sqrt(variance);
  const double z_best = (static_cast<double>(best_hits) - expected) / sd;
  const double z_first = (static_cast<double>(first_hits) - expected) / sd;
  pass = pass && events > 0 && std::abs(z_best) <= kSigmas && std::abs(z_first) <= kSigmas;
  d << "beta=0: " << events << " selections, best picked " << best_hits << " (z " << z_best
    << "), first picked " << first_hits << " (z " << z_first << "), expected " << expected;
  return {pass, d.str()};
}

Verdict softmax_rate() {
  const double expected = 1.0 / (1.0 + std::exp(-0.9));
  const std::vector<Candidate> c{{0, 0.95}, {1, 0.05}};
  Rng rng(kSeed);
  std::size_t first = 0;
  const std::size_t n = 1000000;
  for (std::size_t i = 0; i < n; ++i) {
    first += select(c, SelectionPolicy::softmax(1.0), Direction::maximize, rng) == 0 ? 1 : 0;
  }
  const double rate = static_cast<double>(first) / n;
  std::ostringstream d;
  d << "rate " << rate << ", closed form " << expected << ", target 0.711 +- 0.005";
  return {std::abs(rate - 0.711) <= 0.005, d.str()};
}

Verdict triangle_distances() {
  const std::array<double, 3> b{0.5, 0.725, 0.95};
  const std::array<double, 3> a{0.275, 0.5, 0.725};
  const double sq = triangle_distance(b, a, DistanceMetric::squared);
  const double ab = triangle_distance(b, a, DistanceMetric::absolute);
  // 3 * 0.225^2 and 3 * 0.225 by hand; none of the inputs is exact in binary,
  // so equality is up to one rounding step.
  const double exact_sq = 3 * (0.225 * 0.225);
  const double exact_ab = 3 * 0.225;
  std::ostringstream d;
  d.precision(17);
  d << "squared " << sq << ", absolute " << ab << " (tolerance 1e-15)";
  return {std::abs(sq - 0.151875) <= 1e-15 && std::abs(ab - 0.675) <= 1e-15 &&
              std::abs(sq - exact_sq) <= 1e-15 && std::abs(ab - exact_ab) <= 1e-15,
          d.str()};
}

Verdict shared_image() {
  const auto& f = fixture();
  const auto& latent = f.inputs.latent;
  const ImageId woman = latent.id_of("woman");
  auto config = f.config(Algorithm::object_based, SelectionPolicy::hardmax());
  auto e = run_ensemble(latent, config, kTrials, kSeed);
  std::size_t i = 0, j = 0;
  while (e.source_initials[i] != woman) ++i;
  while (e.target_initials[j] != woman) ++j;
  std::ostringstream d;
  d << "woman->woman in " << e.count(i, j) << " of " << kTrials << " trials";
  return {e.count(i, j) == kTrials, d.str()};
}

Verdict brute_force() {
  std::mt19937_64 rng(kSeed);
  std::size_t mismatches = 0, mapped = 0;
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 5 + rng() % 6;
    auto inst = testing::random_instance(rng, n, 2 + rng() % 2, 1 + rng() % 3, true);
    auto latent = inst.latent();
    for (auto alg : {Algorithm::object_based, Algorithm::relation_based}) {
      TrialConfig c;
      c.algorithm = alg;
      c.setup = inst.setup;
      c.rng_seed = static_cast<std::uint64_t>(round);
      const auto outcome = run_trial(latent, c);
      testing::Assignment got;
      for (const auto& corr : outcome.functor.entries()) got[corr.source] = corr.target;
      const auto want = alg == Algorithm::object_based ? testing::brute_force_object(inst)
                                                       : testing::brute_force_relation(inst);
      mismatches += got == want ? 0 : 1;
      mapped += want.size();
    }
  }
  std::ostringstream d;
  d << "200 instances x 2 algorithms, " << mapped << " oracle correspondences, "
    << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

struct SweepRun {
  std::string correspondences;
  std::string evaluation;
  std::vector<EvaluatedPoint> rows;
  double seconds;
};

SweepRun full_sweep(unsigned threads) {
  const auto& f = fixture();
  const auto start = Clock::now();
  SweepSpec spec = f.manifest.sweep;
  spec.betas = default_beta_grid();
  spec.n_trials = kTrials;
  auto sweep = run_sweep(f.inputs.latent, f.inputs.setup, spec, threads);
  SweepRun run;
  for (const auto& entry : sweep) {
    run.rows.push_back({entry.point, evaluate(entry.ensemble, f.inputs.human,
                                              f.inputs.similarity, f.manifest.evaluation)});
  }
  run.seconds = seconds_since(start);
  std::ostringstream c, e;
  write_correspondence_csv(c, sweep);
  write_evaluation_csv(e, run.rows);
  run.correspondences = c.str();
  run.evaluation = e.str();
  return run;
}

const SweepRun& sweep_one_thread() {
  static const SweepRun run = full_sweep(1);
  return run;
}

Verdict qualitative_ordering() {
  const auto& run = sweep_one_thread();
  // (policy, beta) -> (object report, relation report)
  std::map<std::pair<PolicyKind, double>, std::pair<const EvaluationReport*, const EvaluationReport*>>
      pairs;
  for (const auto& row : run.rows) {
    auto& slot = pairs[{row.point.policy, row.point.beta.value_or(-1.0)}];
    (row.point.algorithm == Algorithm::object_based ? slot.first : slot.second) = &row.report;
  }
  std::size_t compared = 0, failures = 0;
  double min_width_gap = INFINITY, min_novelty_gap = INFINITY;
  for (const auto& [key, reports] : pairs) {
    const auto* obj = reports.first;
    const auto* rel = reports.second;
    if (!obj || !rel) continue;
    ++compared;
    const double width_gap = rel->mean_width - obj->mean_width;
    min_width_gap = std::min(min_width_gap, width_gap);
    bool ok = width_gap >= 0.0;
    if (obj->novelty && rel->novelty) {
      const double novelty_gap = *obj->novelty - *rel->novelty;
      min_novelty_gap = std::min(min_novelty_gap, novelty_gap);
      ok = ok && novelty_gap >= 0.0;
    } else {
      ok = false;
    }
    failures += ok ? 0 : 1;
  }
  std::ostringstream d;
  d << compared << " (policy, beta) points, " << failures << " out of order, min width gap "
    << min_width_gap << ", min novelty gap " << min_novelty_gap << ", sweep " << run.seconds
    << " s (limit 120 s)";
  return {failures == 0 && compared == 22 && run.seconds < 120.0, d.str()};
}

Verdict determinism() {
  const auto& one = sweep_one_thread();
  const auto again = full_sweep(1);
  const auto threaded = full_sweep(4);
  const bool same = one.correspondences == again.correspondences &&
                    one.evaluation == again.evaluation &&
                    one.correspondences == threaded.correspondences &&
                    one.evaluation == threaded.evaluation;
  std::ostringstream d;
  d << "1 thread x2 and 4 threads, correspondences.csv " << one.correspondences.size()
    << " bytes, evaluation.csv " << one.evaluation.size() << " bytes, "
    << (same ? "identical" : "different");
  return {same, d.str()};
}

Verdict strength_mapping() {
  const double expected[] = {0.05, 0.275, 0.50, 0.725, 0.95};
  bool exact = true;
  std::ostringstream d;
  d.precision(17);
  for (int s = 1; s <= 5; ++s) {
    const double w = strength_to_weight(s);
    exact = exact && w == expected[s - 1];
    d << s << "->" << w << (s < 5 ? ", " : "");
  }
  return {exact, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"functor laws on random categories", functor_laws},
      {"elicitation calibration", elicitation_calibration},
      {"softmax limits", softmax_limit},
      {"softmax two-candidate rate", softmax_rate},
      {"triangle distance", triangle_distances},
      {"shared image maps to itself", shared_image},
      {"brute-force equivalence", brute_force},
      {"qualitative ordering", qualitative_ordering},
      {"sweep determinism", determinism},
      {"strength to weight", strength_mapping},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %s: %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
    std::fflush(stdout);
    failed += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
