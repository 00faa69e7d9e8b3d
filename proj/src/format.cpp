// SPDX-License-Identifier: Apache-2.0

#include "qfcre/format.hpp"

#include <charconv>
#include <cstdio>

#include "qfcre/errors.hpp"

namespace qfcre {

std::string num17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_param(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(std::string_view s, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(delim, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(s.substr(start));
      return out;
    }
    out.emplace_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::optional<double> parse_double(std::string_view token) {
  token = trim(token);
  if (token.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return v;
}

std::vector<double> parse_double_list(std::string_view text,
                                      const std::string& what) {
  std::vector<double> out;
  for (const auto& tok : split(text, ',')) {
    const auto v = parse_double(tok);
    if (!v) {
      throw ValidationError(what + ": could not parse '" + std::string(trim(tok)) +
                            "' as a number");
    }
    out.push_back(*v);
  }
  if (out.empty()) throw ValidationError(what + ": empty list");
  return out;
}

}  // namespace qfcre
