#include "tint/simulation.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "tint/error.hpp"
#include "tint/evaluation.hpp"

namespace tint {

SelectionPolicy ConfigPoint::selection_policy() const {
  if (policy == PolicyKind::hardmax) return SelectionPolicy::hardmax();
  return SelectionPolicy::softmax(beta.value_or(0.0));
}

std::string ConfigPoint::key() const {
  std::string k;
  k += to_string(algorithm);
  k += '/';
  k += to_string(policy);
  k += '/';
  k += to_string(metric);
  if (policy == PolicyKind::softmax && beta) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), *beta,
                                         std::chars_format::hex);
    k += "/beta=";
    k.append(buf.data(), ptr);
  }
  return k;
}

std::uint64_t ConfigPoint::hash() const { return fnv1a64(key()); }

namespace {

struct Tally {
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> unmapped;
};

void run_range(const LatentCategory& latent, TrialConfig config,
               const std::vector<std::size_t>& target_index, std::uint64_t master_seed,
               std::uint64_t point_hash, std::size_t begin, std::size_t end,
               Tally& tally, std::vector<std::uint32_t>& widths) {
  const std::size_t n_targets = config.setup.target_initials.size();
  for (std::size_t t = begin; t < end; ++t) {
    config.rng_seed = derive_trial_seed(master_seed, point_hash, t);
    const TrialOutcome outcome = run_trial(latent, config);
    for (std::size_t i = 0; i < config.setup.source_initials.size(); ++i) {
      const Correspondence* c = outcome.functor.find(config.setup.source_initials[i]);
      if (c == nullptr) {
        ++tally.unmapped[i];
      } else {
        ++tally.counts[i * n_targets + target_index[c->target]];
      }
    }
    widths[t] = static_cast<std::uint32_t>(width(outcome.functor));
  }
}

}  // namespace

TrialEnsemble run_ensemble(const LatentCategory& latent, const TrialConfig& base,
                           std::size_t n_trials, std::uint64_t master_seed,
                           unsigned threads) {
  if (n_trials == 0) throw InputError("an ensemble needs at least one trial");
  base.validate(latent);

  TrialEnsemble ensemble;
  ensemble.point = {base.algorithm, base.policy.kind, base.metric,
                    base.policy.kind == PolicyKind::softmax
                        ? std::optional<double>(base.policy.beta)
                        : std::nullopt};
  ensemble.n_trials = n_trials;
  ensemble.source_initials = base.setup.source_initials;
  ensemble.target_initials = base.setup.target_initials;
  for (ImageId id : ensemble.source_initials) ensemble.source_labels.push_back(latent.label(id));
  for (ImageId id : ensemble.target_initials) ensemble.target_labels.push_back(latent.label(id));

  const std::size_t ns = ensemble.n_sources();
  const std::size_t nt = ensemble.n_targets();
  std::vector<std::size_t> target_index(latent.size(), 0);
  for (std::size_t j = 0; j < nt; ++j) target_index[ensemble.target_initials[j]] = j;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, n_trials);
  const std::uint64_t point_hash = ensemble.point.hash();

  ensemble.widths.assign(n_trials, 0);
  std::vector<Tally> tallies(workers, Tally{std::vector<std::uint64_t>(ns * nt, 0),
                                            std::vector<std::uint64_t>(ns, 0)});
  auto range = [&](std::size_t w) {
    return std::make_pair(n_trials * w / workers, n_trials * (w + 1) / workers);
  };

  if (workers == 1) {
    run_range(latent, base, target_index, master_seed, point_hash, 0, n_trials,
              tallies[0], ensemble.widths);
  } else {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          const auto [begin, end] = range(w);
          run_range(latent, base, target_index, master_seed, point_hash, begin, end,
                    tallies[w], ensemble.widths);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  ensemble.counts.assign(ns * nt, 0);
  ensemble.unmapped.assign(ns, 0);
  for (const Tally& t : tallies) {
    for (std::size_t k = 0; k < t.counts.size(); ++k) ensemble.counts[k] += t.counts[k];
    for (std::size_t k = 0; k < ns; ++k) ensemble.unmapped[k] += t.unmapped[k];
  }
  return ensemble;
}

void SweepSpec::validate() const {
  if (algorithms.empty() || policies.empty() || metrics.empty()) {
    throw InputError("sweep needs at least one algorithm, policy and metric");
  }
  if (n_trials == 0) throw InputError("sweep needs n_trials >= 1");
  const bool softmax =
      std::find(policies.begin(), policies.end(), PolicyKind::softmax) != policies.end();
  if (softmax && betas.empty()) throw InputError("softmax sweep needs at least one beta");
  for (double b : betas) SelectionPolicy::softmax(b).validate();
}

std::vector<ConfigPoint> SweepSpec::points() const {
  std::vector<ConfigPoint> out;
  for (Algorithm a : algorithms) {
    for (DistanceMetric m : metrics) {
      for (PolicyKind p : policies) {
        if (p == PolicyKind::hardmax) {
          out.push_back({a, p, m, std::nullopt});
          continue;
        }
        for (double b : betas) out.push_back({a, p, m, b});
      }
    }
  }
  return out;
}

std::vector<SweepEntry> run_sweep(const LatentCategory& latent,
                                  const MetaphorSetup& setup, const SweepSpec& spec,
                                  unsigned threads) {
  spec.validate();
  std::vector<SweepEntry> results;
  for (const ConfigPoint& point : spec.points()) {
    TrialConfig config;
    config.algorithm = point.algorithm;
    config.policy = point.selection_policy();
    config.metric = point.metric;
    config.setup = setup;
    config.softmax_conflict_resolution = spec.softmax_conflict_resolution;
    results.push_back(
        {point, run_ensemble(latent, config, spec.n_trials, spec.master_seed, threads)});
  }
  return results;
}

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (n == 0) throw InputError("beta grid needs at least one point");
  if (!(lo > 0.0 && hi >= lo && std::isfinite(hi))) {
    throw InputError("log-spaced grid needs 0 < lo <= hi");
  }
  if (n == 1) return {lo};
  std::vector<double> grid(n);
  const double step = (std::log10(hi) - std::log10(lo)) / static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    grid[k] = std::pow(10.0, std::log10(lo) + step * static_cast<double>(k));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<double> default_beta_grid() { return log_grid(0.1, 100.0, 21); }

}  // namespace tint
