#pragma once
// Minimal CSV helpers shared by the readers and writers. Fields are split on
// ',' with surrounding spaces trimmed; quoting is not supported.

#include <charconv>
#include <cmath>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tint::csv {

struct Line {
  std::size_t number;  // 1-based
  std::vector<std::string> fields;
};

// Reads all non-blank lines. Strips a leading BOM and trailing '\r'; throws
// InputError on invalid UTF-8.
std::vector<Line> read(std::istream& in, const std::string& source_name);

std::optional<double> parse_number(std::string_view text);

// Shortest representation that round-trips, independent of locale.
std::string format_number(double value);

}  // namespace tint::csv
