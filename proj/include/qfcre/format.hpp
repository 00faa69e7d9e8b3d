// SPDX-License-Identifier: Apache-2.0
// Text helpers shared by CSV emission and input parsing.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qfcre {

// Round-trippable double formatting (17 significant digits, %.17g).
std::string num17(double v);

// Shortest human-readable formatting (%g) for parameter display names.
std::string format_param(double v);

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char delim);

// Full-token parse via std::from_chars; nullopt unless the entire trimmed
// token is consumed. Locale independent.
std::optional<double> parse_double(std::string_view token);

// Comma-separated doubles; `what` names the field in error messages.
std::vector<double> parse_double_list(std::string_view text,
                                      const std::string& what);

}  // namespace qfcre
