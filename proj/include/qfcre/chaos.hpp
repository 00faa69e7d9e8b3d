// SPDX-License-Identifier: Apache-2.0
// Logistic-map trajectories and their spacing-estimator entropy sweep.

#pragma once

#include <cstddef>
#include <vector>

#include "qfcre/model.hpp"

namespace qfcre {

struct LogisticConfig {
  double a = 0.0;           // map parameter, in [0, 4]
  double x0 = 0.0;          // initial state, in [0, 1]
  std::size_t length = 0;   // number of collected values, >= 2
  std::size_t burn_in = 0;  // iterations discarded before collection
};

// x_{t+1} = a x_t (1 - x_t). With burn_in = 0 the first collected value is
// x0 itself.
std::vector<double> logistic_series(const LogisticConfig& cfg);

struct ChaosRow {
  double a = 0.0;
  double alpha = 0.0;
  double entropy = 0.0;
};

// For each map parameter (sorted ascending): generate a trajectory from x0,
// feed it to the spacing estimator (gaps convention), and report the
// entropy. Duplicated parameters yield identical rows.
std::vector<ChaosRow> chaos_entropy_sweep(std::vector<double> a_values,
                                          double x0, std::size_t length,
                                          FractionalOrder alpha,
                                          std::size_t burn_in = 0);

}  // namespace qfcre
