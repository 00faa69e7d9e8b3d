// SPDX-License-Identifier: Apache-2.0

#include "qfcre/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>
#include <utility>

#include "qfcre/errors.hpp"
#include "qfcre/format.hpp"

namespace qfcre {

SampleData::SampleData(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw ValidationError("SampleData: need at least 2 values, got " +
                          std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || values_[i] < 0.0) {
      throw ValidationError("SampleData: value at index " + std::to_string(i) +
                            " must be finite and nonnegative, got " +
                            format_param(values_[i]));
    }
  }
  std::stable_sort(values_.begin(), values_.end());
}

const char* convention_name(SpacingConvention c) {
  return c == SpacingConvention::gaps ? "gaps" : "zero-baseline";
}

SpacingConvention parse_convention(const std::string& text) {
  if (text == "gaps") return SpacingConvention::gaps;
  if (text == "zero-baseline" || text == "zero_baseline") {
    return SpacingConvention::zero_baseline;
  }
  throw ValidationError("unknown spacing convention '" + text +
                        "' (expected 'gaps' or 'zero-baseline')");
}

EntropyEstimate estimate_qfcre(const SampleData& sample, FractionalOrder alpha,
                               SpacingConvention convention) {
  const auto& x = sample.sorted();
  const std::size_t n = x.size();
  const double a = alpha;
  double sum = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    const double ui = double(i) / double(n);
    const double weight = (1.0 - ui) * std::pow(-std::log1p(-ui), a);
    const double spacing = convention == SpacingConvention::gaps
                               ? x[i] - x[i - 1]
                               : x[i - 1] - (i >= 2 ? x[i - 2] : 0.0);
    sum += weight * spacing;
  }
  return {sum, a, n};
}

double empirical_qdf(const SampleData& sample, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw ValidationError("empirical_qdf: u must lie in (0,1), got u=" +
                          format_param(u));
  }
  const auto& x = sample.sorted();
  const std::size_t n = x.size();
  const std::size_t k = std::size_t(std::floor(u * double(n))) + 1;
  if (k <= 1) return 0.0;
  return double(n) * (x[k - 1] - x[k - 2]);
}

std::vector<WindowEstimate> estimate_qfcre_windowed(
    const std::vector<double>& series, std::size_t window, std::size_t step,
    const std::vector<double>& alphas, SpacingConvention convention) {
  if (window < 2) {
    throw ValidationError("windowed estimate: window length must be >= 2");
  }
  if (step < 1) {
    throw ValidationError("windowed estimate: step must be >= 1");
  }
  if (series.size() < window) {
    throw ValidationError("windowed estimate: series has " +
                          std::to_string(series.size()) +
                          " values, shorter than the window length " +
                          std::to_string(window));
  }
  if (alphas.empty()) {
    throw ValidationError("windowed estimate: need at least one alpha");
  }
  std::vector<WindowEstimate> rows;
  for (std::size_t start = 0; start + window <= series.size(); start += step) {
    const SampleData sample(
        std::vector<double>(series.begin() + std::ptrdiff_t(start),
                            series.begin() + std::ptrdiff_t(start + window)));
    for (double a : alphas) {
      const auto est = estimate_qfcre(sample, FractionalOrder(a), convention);
      rows.push_back({start, a, est.value});
    }
  }
  return rows;
}

std::vector<double> read_sample_stream(std::istream& in,
                                       const std::string& origin) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    const std::string_view token = trim(line);
    if (token.empty()) continue;
    const auto value = parse_double(token);
    if (!value) {
      throw ValidationError(origin + " line " + std::to_string(line_no) +
                            ": could not parse sample value '" +
                            std::string(token) + "'");
    }
    if (!std::isfinite(*value) || *value < 0.0) {
      throw ValidationError(origin + " line " + std::to_string(line_no) +
                            ": sample values must be finite and nonnegative, "
                            "got " +
                            format_param(*value));
    }
    values.push_back(*value);
  }
  if (values.size() < 2) {
    throw ValidationError(origin + ": need at least 2 sample values, found " +
                          std::to_string(values.size()));
  }
  return values;
}

std::vector<double> read_sample_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ValidationError("could not open sample file '" + path + "'");
  }
  return read_sample_stream(file, path);
}

}  // namespace qfcre
