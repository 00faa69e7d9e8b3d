// SPDX-License-Identifier: Apache-2.0
// Exception taxonomy: invalid inputs vs. numerical non-convergence.

#pragma once

#include <stdexcept>
#include <string>

namespace qfcre {

// Bad arguments, malformed model specs, unreadable or inconsistent input
// files. Maps to CLI exit status 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Numerical non-convergence: a divergent integral, an exhausted refinement
// budget, or insufficient truncation. Carries the partial value accumulated
// before the failure. Maps to CLI exit status 2.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, double partial_value,
                  double error_estimate)
      : std::runtime_error(what),
        partial(partial_value),
        est_error(error_estimate) {}

  double partial;
  double est_error;
};

}  // namespace qfcre
