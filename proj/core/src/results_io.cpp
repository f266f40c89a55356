#include "tint/results_io.hpp"

#include <ostream>

#include "csv.hpp"

namespace tint {

std::string format_number(double value) { return csv::format_number(value); }

namespace {

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json point_json(const ConfigPoint& p) {
  return {{"algorithm", to_string(p.algorithm)},
          {"policy", to_string(p.policy)},
          {"metric", to_string(p.metric)},
          {"beta", optional_json(p.beta)}};
}

}  // namespace

void write_correspondence_csv(std::ostream& out, std::span<const SweepEntry> sweep) {
  out << kCorrespondenceHeader << '\n';
  for (const SweepEntry& entry : sweep) {
    const auto& e = entry.ensemble;
    const std::string prefix = std::string(to_string(entry.point.algorithm)) + ',' +
                               std::string(to_string(entry.point.policy)) + ',' +
                               std::string(to_string(entry.point.metric)) + ',' +
                               optional_number(entry.point.beta) + ',';
    for (std::size_t i = 0; i < e.n_sources(); ++i) {
      for (std::size_t j = 0; j < e.n_targets(); ++j) {
        out << prefix << e.source_labels[i] << ',' << e.target_labels[j] << ','
            << e.count(i, j) << '\n';
      }
    }
  }
}

void write_evaluation_csv(std::ostream& out, std::span<const EvaluatedPoint> rows) {
  out << kEvaluationHeader << '\n';
  for (const EvaluatedPoint& row : rows) {
    out << optional_number(row.point.beta) << ',' << to_string(row.point.algorithm) << ','
        << to_string(row.point.policy) << ',' << to_string(row.point.metric) << ','
        << optional_number(row.report.data_fit) << ','
        << format_number(row.report.mean_width) << ','
        << optional_number(row.report.novelty) << '\n';
  }
}

nlohmann::json sweep_summary(const SweepSpec& spec, std::span<const SweepEntry> sweep,
                             std::span<const EvaluatedPoint> rows) {
  nlohmann::json j;
  j["n_trials"] = spec.n_trials;
  j["master_seed"] = spec.master_seed;
  j["softmax_conflict_resolution"] = spec.softmax_conflict_resolution;
  j["betas"] = spec.betas;

  nlohmann::json points = nlohmann::json::array();
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    const auto& e = sweep[k].ensemble;
    nlohmann::json p = point_json(sweep[k].point);
    std::uint64_t unmapped = 0;
    for (auto u : e.unmapped) unmapped += u;
    p["unmapped"] = unmapped;
    if (k < rows.size()) {
      const auto& r = rows[k].report;
      p["data_fit"] = optional_json(r.data_fit);
      p["mean_width"] = r.mean_width;
      p["novelty"] = optional_json(r.novelty);
      p["data_fit_excluded_sources"] = r.excluded_sources;
    }
    points.push_back(std::move(p));
  }
  j["points"] = std::move(points);
  return j;
}

}  // namespace tint
