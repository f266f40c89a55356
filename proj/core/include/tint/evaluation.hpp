#pragma once
// Output measures: data fit, systematicity (functor width) and novelty.
//
// Correlations return std::nullopt when undefined, i.e. when either input is
// constant or has fewer than two entries.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tint/category.hpp"
#include "tint/ingestion.hpp"
#include "tint/simulation.hpp"

namespace tint {

enum class RankStatistic { spearman, kendall };

std::string_view to_string(RankStatistic statistic);
RankStatistic parse_rank_statistic(std::string_view text);

// 1-based ranks in ascending order of value; ties share their average rank.
std::vector<double> average_ranks(std::span<const double> values);

// Spearman's rho: Pearson correlation of average ranks.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);
// Kendall's tau-b.
std::optional<double> kendall_tau_b(std::span<const double> x, std::span<const double> y);
std::optional<double> rank_correlation(std::span<const double> x,
                                       std::span<const double> y, RankStatistic statistic);

struct EvaluationOptions {
  RankStatistic statistic = RankStatistic::spearman;
  // Rank all (source, target) pairs together instead of averaging one
  // correlation per source initial.
  bool pooled = false;
};

struct DataFit {
  std::optional<double> value;
  // One entry per source initial, empty when that source's correlation is
  // undefined (and thus left out of the mean). Empty in pooled mode.
  std::vector<std::optional<double>> per_source;
  std::vector<std::string> excluded;
};

// Throws InputError if `human` lacks a pair the ensemble needs.
DataFit data_fit(const TrialEnsemble& ensemble, const InterpretationData& human,
                 const EvaluationOptions& options = {});

// Number of distinct target images hit by the functor.
std::size_t width(const FunctorMap& functor);
double mean_width(const TrialEnsemble& ensemble);

// Rank correlation between the flattened correspondence counts and the
// embedding similarities of the same pairs. Lower means more novel.
std::optional<double> novelty(const TrialEnsemble& ensemble, const SimilarityMatrix& sim,
                              RankStatistic statistic = RankStatistic::spearman);

struct EvaluationReport {
  std::optional<double> data_fit;
  double mean_width = 0.0;
  std::optional<double> novelty;
  std::vector<std::string> excluded_sources;
};

EvaluationReport evaluate(const TrialEnsemble& ensemble, const InterpretationData& human,
                          const SimilarityMatrix& sim,
                          const EvaluationOptions& options = {});

}  // namespace tint
