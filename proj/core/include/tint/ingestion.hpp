#pragma once
// Input files.
//
// Survey (association strengths), UTF-8 CSV:
//   label,<label_1>,...,<label_n>
//   <label_i>,s_i1,...,s_in
// Interpretation and similarity data, UTF-8 CSV triples:
//   source_label,target_label,value
// The triple files may start with a header row; it is recognized by a
// non-numeric third field. A leading UTF-8 BOM is skipped, invalid UTF-8 is
// rejected with its line number. Numbers use '.' as decimal point regardless
// of locale. Blank lines are ignored.

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tint/category.hpp"

namespace tint {

enum class StrengthMode {
  strict,   // integers 1..5 only
  lenient,  // any real value in [1, 5], e.g. averaged over participants
};

// Likert strength to associative probability: 0.05 + 0.225 (s - 1).
double strength_to_weight(double s, StrengthMode mode = StrengthMode::strict);

struct AssociationSurvey {
  std::vector<std::string> labels;
  std::vector<double> strengths;  // row-major n*n

  std::size_t size() const { return labels.size(); }
  double at(std::size_t i, std::size_t j) const { return strengths[i * size() + j]; }

  friend bool operator==(const AssociationSurvey&, const AssociationSurvey&) = default;
};

AssociationSurvey parse_survey(std::istream& in, const std::string& source_name,
                               StrengthMode mode = StrengthMode::strict);
AssociationSurvey load_survey(const std::filesystem::path& path,
                              StrengthMode mode = StrengthMode::strict);
void write_survey(std::ostream& out, const AssociationSurvey& survey);

// Applies strength_to_weight elementwise; the diagonal becomes 1.0.
LatentCategory survey_to_latent(const AssociationSurvey& survey,
                                StrengthMode mode = StrengthMode::strict);

// Values keyed by (source_label, target_label).
class PairTable {
 public:
  // Throws InputError on a duplicate pair.
  void insert(std::string source, std::string target, double value);
  std::optional<double> find(std::string_view source, std::string_view target) const;
  // Throws InputError naming the pair when it is missing.
  double at(std::string_view source, std::string_view target) const;
  std::size_t size() const { return values_.size(); }

  // Throws InputError naming the first (source, target) pair not covered.
  void require_pairs(std::span<const std::string> sources,
                     std::span<const std::string> targets,
                     std::string_view what) const;

 private:
  std::map<std::pair<std::string, std::string>, double, std::less<>> values_;
};

// Mean human agreement with "target is like source" for each image pair.
struct InterpretationData {
  PairTable scores;
};

// Embedding cosine similarity for each image pair, in [-1, 1].
struct SimilarityMatrix {
  PairTable values;
};

InterpretationData parse_interpretation(std::istream& in, const std::string& source_name);
InterpretationData load_interpretation(const std::filesystem::path& path);
SimilarityMatrix parse_similarity(std::istream& in, const std::string& source_name);
SimilarityMatrix load_similarity(const std::filesystem::path& path);

}  // namespace tint
