#include "tint/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "tint/error.hpp"

namespace tint {

std::string_view to_string(RankStatistic statistic) {
  return statistic == RankStatistic::spearman ? "spearman" : "kendall";
}

RankStatistic parse_rank_statistic(std::string_view text) {
  if (text == "spearman") return RankStatistic::spearman;
  if (text == "kendall") return RankStatistic::kendall;
  throw InputError("unknown rank statistic '" + std::string(text) +
                   "' (expected spearman or kendall)");
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t k = 0;
  while (k < order.size()) {
    std::size_t end = k + 1;
    while (end < order.size() && values[order[end]] == values[order[k]]) ++end;
    // positions k..end-1 hold ranks k+1..end
    const double rank = (static_cast<double>(k + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t m = k; m < end; ++m) ranks[order[m]] = rank;
    k = end;
  }
  return ranks;
}

namespace {

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

bool usable(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("rank correlation of vectors with different lengths");
  if (x.size() < 2) return false;
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double e) { return e == v.front(); });
  };
  return !constant(x) && !constant(y);
}

}  // namespace

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  if (!usable(x, y)) return std::nullopt;
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson(rx, ry);
}

std::optional<double> kendall_tau_b(std::span<const double> x, std::span<const double> y) {
  if (!usable(x, y)) return std::nullopt;
  // O(n^2) is fine for the handful of pairs involved.
  double concordant = 0.0, discordant = 0.0, ties_x = 0.0, ties_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0.0 && dy == 0.0) continue;
      if (dx == 0.0) {
        ties_x += 1.0;
      } else if (dy == 0.0) {
        ties_y += 1.0;
      } else if ((dx > 0.0) == (dy > 0.0)) {
        concordant += 1.0;
      } else {
        discordant += 1.0;
      }
    }
  }
  const double denom = std::sqrt((concordant + discordant + ties_x) *
                                 (concordant + discordant + ties_y));
  if (denom == 0.0) return std::nullopt;
  return std::clamp((concordant - discordant) / denom, -1.0, 1.0);
}

std::optional<double> rank_correlation(std::span<const double> x,
                                       std::span<const double> y,
                                       RankStatistic statistic) {
  return statistic == RankStatistic::spearman ? spearman(x, y) : kendall_tau_b(x, y);
}

DataFit data_fit(const TrialEnsemble& ensemble, const InterpretationData& human,
                 const EvaluationOptions& options) {
  human.scores.require_pairs(ensemble.source_labels, ensemble.target_labels,
                             "interpretation data");
  DataFit fit;
  const std::size_t ns = ensemble.n_sources();
  const std::size_t nt = ensemble.n_targets();

  if (options.pooled) {
    std::vector<double> counts, scores;
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t j = 0; j < nt; ++j) {
        counts.push_back(static_cast<double>(ensemble.count(i, j)));
        scores.push_back(human.scores.at(ensemble.source_labels[i], ensemble.target_labels[j]));
      }
    }
    fit.value = rank_correlation(counts, scores, options.statistic);
    return fit;
  }

  double sum = 0.0;
  std::size_t defined = 0;
  for (std::size_t i = 0; i < ns; ++i) {
    std::vector<double> counts(nt), scores(nt);
    for (std::size_t j = 0; j < nt; ++j) {
      counts[j] = static_cast<double>(ensemble.count(i, j));
      scores[j] = human.scores.at(ensemble.source_labels[i], ensemble.target_labels[j]);
    }
    const auto rho = rank_correlation(counts, scores, options.statistic);
    fit.per_source.push_back(rho);
    if (rho) {
      sum += *rho;
      ++defined;
    } else {
      fit.excluded.push_back(ensemble.source_labels[i]);
    }
  }
  if (defined > 0) fit.value = sum / static_cast<double>(defined);
  return fit;
}

std::size_t width(const FunctorMap& functor) {
  std::set<ImageId> range;
  for (const Correspondence& c : functor.entries()) range.insert(c.target);
  return range.size();
}

double mean_width(const TrialEnsemble& ensemble) {
  if (ensemble.widths.empty()) return 0.0;
  std::uint64_t total = 0;
  for (auto w : ensemble.widths) total += w;
  return static_cast<double>(total) / static_cast<double>(ensemble.widths.size());
}

std::optional<double> novelty(const TrialEnsemble& ensemble, const SimilarityMatrix& sim,
                              RankStatistic statistic) {
  sim.values.require_pairs(ensemble.source_labels, ensemble.target_labels,
                           "similarity matrix");
  std::vector<double> counts, similarities;
  for (std::size_t i = 0; i < ensemble.n_sources(); ++i) {
    for (std::size_t j = 0; j < ensemble.n_targets(); ++j) {
      counts.push_back(static_cast<double>(ensemble.count(i, j)));
      similarities.push_back(
          sim.values.at(ensemble.source_labels[i], ensemble.target_labels[j]));
    }
  }
  return rank_correlation(counts, similarities, statistic);
}

EvaluationReport evaluate(const TrialEnsemble& ensemble, const InterpretationData& human,
                          const SimilarityMatrix& sim, const EvaluationOptions& options) {
  EvaluationReport report;
  auto fit = data_fit(ensemble, human, options);
  report.data_fit = fit.value;
  report.excluded_sources = std::move(fit.excluded);
  report.mean_width = mean_width(ensemble);
  report.novelty = novelty(ensemble, sim, options.statistic);
  return report;
}

}  // namespace tint
