#include "tint/ingestion.hpp"

#include <array>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>

#include "csv.hpp"
#include "tint/error.hpp"

namespace tint {

namespace csv {

namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    std::size_t extra = 0;
    std::uint32_t cp = 0;
    if (c < 0x80) {
      ++i;
      continue;
    } else if ((c & 0xE0) == 0xC0) {
      extra = 1;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      extra = 2;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      extra = 3;
      cp = c & 0x07;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return false;
      cp = (cp << 6) | (cc & 0x3F);
    }
    // Reject overlong encodings, surrogates and out-of-range code points.
    static constexpr std::array<std::uint32_t, 4> kMin{0, 0x80, 0x800, 0x10000};
    if (cp < kMin[extra] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::vector<Line> read(std::istream& in, const std::string& source_name) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (number == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (!valid_utf8(raw)) {
      throw InputError("invalid UTF-8", source_name, number);
    }
    if (trim(raw).empty()) continue;

    Line line{number, {}};
    std::size_t start = 0;
    while (true) {
      const auto comma = raw.find(',', start);
      line.fields.push_back(trim(std::string_view(raw).substr(
          start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

std::optional<double> parse_number(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::string format_number(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

}  // namespace csv

double strength_to_weight(double s, StrengthMode mode) {
  if (!(s >= 1.0 && s <= 5.0)) {
    throw InputError("association strength " + csv::format_number(s) +
                     " is outside 1..5");
  }
  if (mode == StrengthMode::strict && s != std::floor(s)) {
    throw InputError("association strength " + csv::format_number(s) +
                     " is not an integer (use lenient strengths for averaged data)");
  }
  // Same affine map as 0.05 + 0.225 (s - 1), written with integer numerators
  // so the Likert points land on the nearest doubles to 0.05, 0.275, ...
  return (2.0 + 9.0 * (s - 1.0)) / 40.0;
}

AssociationSurvey parse_survey(std::istream& in, const std::string& source_name,
                               StrengthMode mode) {
  const auto lines = csv::read(in, source_name);
  if (lines.empty()) throw InputError("empty survey file", source_name);

  const auto& header = lines.front();
  if (header.fields.front() != "label") {
    throw InputError("survey header must start with 'label', found '" +
                         header.fields.front() + "'",
                     source_name, header.number);
  }
  AssociationSurvey survey;
  survey.labels.assign(header.fields.begin() + 1, header.fields.end());
  const std::size_t n = survey.labels.size();
  if (n == 0) throw InputError("survey header lists no images", source_name, header.number);
  for (std::size_t i = 0; i < n; ++i) {
    if (survey.labels[i].empty()) {
      throw InputError("empty label in survey header", source_name, header.number);
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (survey.labels[i] == survey.labels[j]) {
        throw InputError("duplicate label '" + survey.labels[i] + "'", source_name,
                         header.number);
      }
    }
  }

  if (lines.size() - 1 != n) {
    throw InputError("survey has " + std::to_string(lines.size() - 1) +
                         " data rows but the header lists " + std::to_string(n) +
                         " images",
                     source_name, lines.back().number);
  }

  survey.strengths.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = lines[i + 1];
    if (row.fields.size() != n + 1) {
      throw InputError("row has " + std::to_string(row.fields.size() - 1) +
                           " values, expected " + std::to_string(n),
                       source_name, row.number);
    }
    if (row.fields.front() != survey.labels[i]) {
      throw InputError("row label '" + row.fields.front() + "' does not match header label '" +
                           survey.labels[i] + "' at the same position",
                       source_name, row.number);
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& text = row.fields[j + 1];
      const auto value = csv::parse_number(text);
      if (!value) {
        throw InputError("'" + text + "' is not a number", source_name, row.number);
      }
      try {
        strength_to_weight(*value, mode);
      } catch (const InputError& e) {
        throw InputError(e.message() + " (" + survey.labels[i] + "->" + survey.labels[j] + ")",
                         source_name, row.number);
      }
      survey.strengths[i * n + j] = *value;
    }
  }
  return survey;
}

namespace {

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file", path.string());
  return in;
}

}  // namespace

AssociationSurvey load_survey(const std::filesystem::path& path, StrengthMode mode) {
  auto in = open(path);
  return parse_survey(in, path.string(), mode);
}

void write_survey(std::ostream& out, const AssociationSurvey& survey) {
  out << "label";
  for (const auto& l : survey.labels) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < survey.size(); ++i) {
    out << survey.labels[i];
    for (std::size_t j = 0; j < survey.size(); ++j) {
      out << ',' << csv::format_number(survey.at(i, j));
    }
    out << '\n';
  }
}

LatentCategory survey_to_latent(const AssociationSurvey& survey, StrengthMode mode) {
  const std::size_t n = survey.size();
  std::vector<double> weights(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) weights[i * n + j] = strength_to_weight(survey.at(i, j), mode);
    }
  }
  return LatentCategory::build(survey.labels, weights);
}

void PairTable::insert(std::string source, std::string target, double value) {
  auto key = std::make_pair(std::move(source), std::move(target));
  if (values_.contains(key)) {
    throw InputError("duplicate pair (" + key.first + ", " + key.second + ")");
  }
  values_.emplace(std::move(key), value);
}

std::optional<double> PairTable::find(std::string_view source,
                                      std::string_view target) const {
  auto it = values_.find(std::make_pair(std::string(source), std::string(target)));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

double PairTable::at(std::string_view source, std::string_view target) const {
  if (auto v = find(source, target)) return *v;
  throw InputError("no value for pair (" + std::string(source) + ", " +
                   std::string(target) + ")");
}

void PairTable::require_pairs(std::span<const std::string> sources,
                              std::span<const std::string> targets,
                              std::string_view what) const {
  for (const auto& s : sources) {
    for (const auto& t : targets) {
      if (!find(s, t)) {
        throw InputError(std::string(what) + " has no value for pair (" + s + ", " +
                         t + ")");
      }
    }
  }
}

namespace {

PairTable parse_triples(std::istream& in, const std::string& source_name,
                        double lo, double hi) {
  PairTable table;
  bool first = true;
  for (const auto& line : csv::read(in, source_name)) {
    if (line.fields.size() != 3) {
      throw InputError("expected 3 fields (source,target,value), found " +
                           std::to_string(line.fields.size()),
                       source_name, line.number);
    }
    const auto value = csv::parse_number(line.fields[2]);
    if (!value) {
      if (first) {
        first = false;
        continue;  // header row
      }
      throw InputError("'" + line.fields[2] + "' is not a number", source_name,
                       line.number);
    }
    first = false;
    if (line.fields[0].empty() || line.fields[1].empty()) {
      throw InputError("empty label", source_name, line.number);
    }
    if (*value < lo || *value > hi) {
      throw InputError("value " + line.fields[2] + " is outside [" +
                           csv::format_number(lo) + ", " + csv::format_number(hi) + "]",
                       source_name, line.number);
    }
    try {
      table.insert(line.fields[0], line.fields[1], *value);
    } catch (const InputError& e) {
      throw InputError(e.message(), source_name, line.number);
    }
  }
  if (table.size() == 0) throw InputError("no data rows", source_name);
  return table;
}

}  // namespace

InterpretationData parse_interpretation(std::istream& in, const std::string& source_name) {
  return {parse_triples(in, source_name, -HUGE_VAL, HUGE_VAL)};
}

InterpretationData load_interpretation(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_interpretation(in, path.string());
}

SimilarityMatrix parse_similarity(std::istream& in, const std::string& source_name) {
  return {parse_triples(in, source_name, -1.0, 1.0)};
}

SimilarityMatrix load_similarity(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_similarity(in, path.string());
}

}  // namespace tint
