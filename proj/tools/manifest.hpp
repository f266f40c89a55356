#pragma once
// Run manifest: a flat `key = value` file, '#' starts a comment.
//
//   survey, interpretation, similarity   input paths (relative to the manifest)
//   strengths                            strict | lenient          (strict)
//   source_root, target_root             image labels
//   source_initials, target_initials     comma-separated labels
//   algorithms                           object, relation          (both)
//   policies                             hardmax, softmax          (both)
//   metrics                              squared, absolute         (squared)
//   beta_grid                            lo:hi:n, log-spaced       (0.1:100:21)
//   betas                                explicit comma list, overrides beta_grid
//   n_trials                             trials per config point   (10000)
//   seed                                 master seed, u64          (0)
//   statistic                            spearman | kendall        (spearman)
//   pooled                               true | false              (false)
//   softmax_conflict_resolution          true | false              (false)
//   output_dir                           relative to the manifest  (results)
//   threads                              worker threads, 0 = all   (1)

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tint/evaluation.hpp"
#include "tint/ingestion.hpp"
#include "tint/simulation.hpp"

namespace tint::cli {

struct RunManifest {
  std::filesystem::path file;  // where the manifest came from, for messages
  std::filesystem::path survey;
  std::filesystem::path interpretation;
  std::filesystem::path similarity;
  StrengthMode strengths = StrengthMode::strict;

  std::string source_root;
  std::string target_root;
  std::vector<std::string> source_initials;
  std::vector<std::string> target_initials;

  SweepSpec sweep;
  EvaluationOptions evaluation;
  std::filesystem::path output_dir;
  unsigned threads = 1;

  // 1-based line of each key, for error messages.
  std::map<std::string, std::size_t> lines;

  std::size_t line_of(const std::string& key) const;
};

RunManifest parse_manifest(std::istream& in, const std::filesystem::path& file);
RunManifest load_manifest(const std::filesystem::path& file);

// "lo:hi:n" -> n log-spaced points.
std::vector<double> parse_beta_grid(const std::string& text);

}  // namespace tint::cli
