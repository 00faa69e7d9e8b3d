// SPDX-License-Identifier: Apache-2.0
// Nonparametric spacing estimator of the fractional entropy from order
// statistics.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qfcre/model.hpp"

namespace qfcre {

// Order statistics of a nonnegative sample. Input order is irrelevant: a
// stable sort runs at construction. Rejects n < 2, negative and non-finite
// values. Ties are legal and contribute zero spacings.
class SampleData {
 public:
  explicit SampleData(std::vector<double> values);

  const std::vector<double>& sorted() const { return values_; }
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_;
};

struct EntropyEstimate {
  double value = 0.0;
  double alpha = 0.0;
  std::size_t n = 0;
};

// Which spacings the weighted sum runs over.
//   gaps:          D_i = X_{i+1:n} - X_{i:n}. Depends only on spacings, so
//                  the estimate is shift invariant. Library default.
//   zero_baseline: D_i = X_{i:n} - X_{i-1:n} with an artificial X_{0:n} = 0.
//                  Not shift invariant; this is the protocol behind the
//                  reference simulation tabulations the simulation lab
//                  reproduces, so it is exposed there as the default.
enum class SpacingConvention { gaps, zero_baseline };
const char* convention_name(SpacingConvention c);
SpacingConvention parse_convention(const std::string& text);

// Weighted-spacings estimate
//     sum_{i=1}^{n-1} (1 - i/n) (-log(1 - i/n))^alpha D_i
// with D_i per the chosen convention. O(n) after sorting.
EntropyEstimate estimate_qfcre(
    const SampleData& sample, FractionalOrder alpha,
    SpacingConvention convention = SpacingConvention::gaps);

// Histogram-type quantile-density estimate: n (X_{k:n} - X_{k-1:n}) on the
// panel ((k-1)/n, k/n). The first panel is 0 (no spacing exists below
// X_{1:n}), matching the gaps convention: integrating over (1/n, 1)
// telescopes to X_{n:n} - X_{1:n}. Requires 0 < u < 1.
double empirical_qdf(const SampleData& sample, double u);

struct WindowEstimate {
  std::size_t window_start = 0;
  double alpha = 0.0;
  double estimate = 0.0;
};

// Sliding-window estimates over a nonnegative series; rows ordered by
// window start, then by the alphas in their given order.
std::vector<WindowEstimate> estimate_qfcre_windowed(
    const std::vector<double>& series, std::size_t window, std::size_t step,
    const std::vector<double>& alphas,
    SpacingConvention convention = SpacingConvention::gaps);

// Sample file format: one nonnegative decimal per line, '#' starts a
// comment, blank lines ignored, '.' decimal point regardless of locale.
// Errors carry 1-based line numbers.
std::vector<double> read_sample_stream(std::istream& in,
                                       const std::string& origin);
std::vector<double> read_sample_file(const std::string& path);

}  // namespace qfcre
