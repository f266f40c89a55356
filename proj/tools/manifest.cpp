#include "manifest.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

#include "tint/error.hpp"

namespace tint::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
bool parse_integer(const std::string& text, T& out) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_double(const std::string& text, double& out) {
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_bool(const std::string& text, bool& out) {
  if (text == "true" || text == "yes" || text == "1") {
    out = true;
    return true;
  }
  if (text == "false" || text == "no" || text == "0") {
    out = false;
    return true;
  }
  return false;
}

}  // namespace

std::size_t RunManifest::line_of(const std::string& key) const {
  auto it = lines.find(key);
  return it == lines.end() ? 0 : it->second;
}

std::vector<double> parse_beta_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(trim(part));
  double lo = 0.0, hi = 0.0;
  std::size_t n = 0;
  if (parts.size() != 3 || !parse_double(parts[0], lo) || !parse_double(parts[1], hi) ||
      !parse_integer(parts[2], n)) {
    throw InputError("beta grid '" + text + "' is not of the form lo:hi:n");
  }
  return log_grid(lo, hi, n);
}

RunManifest parse_manifest(std::istream& in, const std::filesystem::path& file) {
  RunManifest m;
  m.file = file;
  const std::string name = file.string();
  const std::filesystem::path base = file.parent_path();
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base / path;
  };

  bool have_betas = false;
  bool have_grid = false;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw InputError("expected 'key = value'", name, number);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (m.lines.contains(key)) throw InputError("duplicate key '" + key + "'", name, number);
    m.lines[key] = number;

    auto fail = [&](const std::string& what) -> InputError {
      return InputError("bad value for '" + key + "': " + what, name, number);
    };
    auto each = [&](const std::function<void(const std::string&)>& f) {
      const auto items = split_list(value);
      if (items.empty()) throw fail("empty list");
      for (const auto& item : items) {
        try {
          f(item);
        } catch (const InputError& e) {
          throw fail(e.message());
        }
      }
    };

    if (key == "survey") {
      m.survey = resolve(value);
    } else if (key == "interpretation") {
      m.interpretation = resolve(value);
    } else if (key == "similarity") {
      m.similarity = resolve(value);
    } else if (key == "strengths") {
      if (value == "strict") m.strengths = StrengthMode::strict;
      else if (value == "lenient") m.strengths = StrengthMode::lenient;
      else throw fail("expected strict or lenient");
    } else if (key == "source_root") {
      m.source_root = value;
    } else if (key == "target_root") {
      m.target_root = value;
    } else if (key == "source_initials") {
      m.source_initials = split_list(value);
    } else if (key == "target_initials") {
      m.target_initials = split_list(value);
    } else if (key == "algorithms") {
      m.sweep.algorithms.clear();
      each([&](const std::string& s) { m.sweep.algorithms.push_back(parse_algorithm(s)); });
    } else if (key == "policies") {
      m.sweep.policies.clear();
      each([&](const std::string& s) { m.sweep.policies.push_back(parse_policy_kind(s)); });
    } else if (key == "metrics") {
      m.sweep.metrics.clear();
      each([&](const std::string& s) { m.sweep.metrics.push_back(parse_metric(s)); });
    } else if (key == "beta_grid") {
      have_grid = true;
      if (!have_betas) {
        try {
          m.sweep.betas = parse_beta_grid(value);
        } catch (const InputError& e) {
          throw fail(e.message());
        }
      }
    } else if (key == "betas") {
      have_betas = true;
      m.sweep.betas.clear();
      each([&](const std::string& s) {
        double b = 0.0;
        if (!parse_double(s, b)) throw InputError("'" + s + "' is not a number");
        m.sweep.betas.push_back(b);
      });
    } else if (key == "n_trials") {
      if (!parse_integer(value, m.sweep.n_trials) || m.sweep.n_trials == 0) {
        throw fail("expected a positive integer");
      }
    } else if (key == "seed") {
      if (!parse_integer(value, m.sweep.master_seed)) throw fail("expected an unsigned 64-bit integer");
    } else if (key == "statistic") {
      try {
        m.evaluation.statistic = parse_rank_statistic(value);
      } catch (const InputError& e) {
        throw fail(e.message());
      }
    } else if (key == "pooled") {
      if (!parse_bool(value, m.evaluation.pooled)) throw fail("expected true or false");
    } else if (key == "softmax_conflict_resolution") {
      if (!parse_bool(value, m.sweep.softmax_conflict_resolution)) {
        throw fail("expected true or false");
      }
    } else if (key == "output_dir") {
      m.output_dir = resolve(value);
    } else if (key == "threads") {
      if (!parse_integer(value, m.threads)) throw fail("expected a non-negative integer");
    } else {
      throw InputError("unknown key '" + key + "'", name, number);
    }
  }

  if (!have_grid && !have_betas) m.sweep.betas = default_beta_grid();
  if (m.output_dir.empty()) m.output_dir = base / "results";

  for (const char* key : {"survey", "interpretation", "similarity", "source_root",
                          "target_root", "source_initials", "target_initials"}) {
    if (!m.lines.contains(key)) throw InputError(std::string("missing key '") + key + "'", name);
  }
  if (m.source_initials.empty() || m.target_initials.empty()) {
    throw InputError("initial image lists must not be empty", name);
  }
  return m;
}

RunManifest load_manifest(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InputError("cannot open manifest", file.string());
  return parse_manifest(in, file);
}

}  // namespace tint::cli
