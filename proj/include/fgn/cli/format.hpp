#pragma once

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "fgn/dynamics/phase_state.hpp"

namespace fgn::cli {

/// Shortest decimal that round-trips to the same double, with ".0" appended
/// to integral values so every float column reads as a float.
inline std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, end);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

/// Strict full-string double parse; `field` names the input in errors.
inline double parse_double(std::string_view text, const std::string& field) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  while (first < last && *first == ' ') ++first;
  while (last > first && last[-1] == ' ') --last;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (first == last || ec != std::errc() || ptr != last)
    throw ConfigurationError("field '" + field + "': not a number: '" + std::string(text) + "'");
  return v;
}

/// "0.16,0.08,0.04" -> {0.16, 0.08, 0.04}
inline std::vector<double> parse_double_list(std::string_view text, const std::string& field) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_double(text.substr(start, stop - start), field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace fgn::cli
