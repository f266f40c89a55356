#pragma once
// Sweep result files.
//
// correspondences.csv (long format, one row per config point and image pair):
//   algorithm,policy,metric,beta,source_label,target_label,count
// evaluation.csv (one row per config point):
//   beta,algorithm,policy,metric,data_fit,mean_width,novelty
// In both, beta is empty for hardmax rows and undefined measures are empty.
// Numbers are written in shortest round-trip form.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tint/evaluation.hpp"
#include "tint/simulation.hpp"

namespace tint {

struct EvaluatedPoint {
  ConfigPoint point;
  EvaluationReport report;
};

inline constexpr const char* kCorrespondenceHeader =
    "algorithm,policy,metric,beta,source_label,target_label,count";
inline constexpr const char* kEvaluationHeader =
    "beta,algorithm,policy,metric,data_fit,mean_width,novelty";

std::string format_number(double value);

void write_correspondence_csv(std::ostream& out, std::span<const SweepEntry> sweep);
void write_evaluation_csv(std::ostream& out, std::span<const EvaluatedPoint> rows);

nlohmann::json sweep_summary(const SweepSpec& spec, std::span<const SweepEntry> sweep,
                             std::span<const EvaluatedPoint> rows);

}  // namespace tint
