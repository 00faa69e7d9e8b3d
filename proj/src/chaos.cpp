// SPDX-License-Identifier: Apache-2.0

#include "qfcre/chaos.hpp"

#include <algorithm>
#include <cmath>

#include "qfcre/errors.hpp"
#include "qfcre/estimator.hpp"
#include "qfcre/format.hpp"

namespace qfcre {

std::vector<double> logistic_series(const LogisticConfig& cfg) {
  if (!(cfg.a >= 0.0 && cfg.a <= 4.0)) {
    throw ValidationError("logistic_series: a must lie in [0,4], got a=" +
                          format_param(cfg.a));
  }
  if (!(cfg.x0 >= 0.0 && cfg.x0 <= 1.0)) {
    throw ValidationError("logistic_series: x0 must lie in [0,1], got x0=" +
                          format_param(cfg.x0));
  }
  if (cfg.length < 2) {
    throw ValidationError("logistic_series: length must be >= 2, got " +
                          std::to_string(cfg.length));
  }
  double x = cfg.x0;
  for (std::size_t i = 0; i < cfg.burn_in; ++i) x = cfg.a * x * (1.0 - x);
  std::vector<double> series;
  series.reserve(cfg.length);
  series.push_back(x);
  for (std::size_t i = 1; i < cfg.length; ++i) {
    x = cfg.a * x * (1.0 - x);
    series.push_back(x);
  }
  return series;
}

std::vector<ChaosRow> chaos_entropy_sweep(std::vector<double> a_values,
                                          double x0, std::size_t length,
                                          FractionalOrder alpha,
                                          std::size_t burn_in) {
  if (a_values.empty()) {
    throw ValidationError("chaos_entropy_sweep: need at least one parameter");
  }
  std::sort(a_values.begin(), a_values.end());
  std::vector<ChaosRow> rows;
  rows.reserve(a_values.size());
  for (double a : a_values) {
    const SampleData sample(logistic_series({a, x0, length, burn_in}));
    const auto est = estimate_qfcre(sample, alpha);
    rows.push_back({a, double(alpha), est.value});
  }
  return rows;
}

}  // namespace qfcre
