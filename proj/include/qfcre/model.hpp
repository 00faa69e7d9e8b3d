// SPDX-License-Identifier: Apache-2.0
// Quantile-domain model abstraction: a distribution described by its
// quantile function Q(u) and quantile density q(u) = dQ/du on (0,1).

#pragma once

#include <functional>
#include <string>

#include "qfcre/errors.hpp"

namespace qfcre {

// Fractional order restricted to [0,1]; construction outside rejects.
// Implicitly convertible from double so call sites stay readable while the
// range check happens exactly once, at the boundary.
class FractionalOrder {
 public:
  FractionalOrder(double alpha) : value_(alpha) {  // NOLINT(runtime/explicit)
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw ValidationError("alpha must lie in [0,1], got " +
                            std::to_string(alpha));
    }
  }
  operator double() const { return value_; }
  double value() const { return value_; }

 private:
  double value_;
};

// A distribution in the quantile domain. `quantile` and `density` are plain
// math functions on the open interval (0,1); they may return +inf where the
// family is singular at an endpoint. Numerical consumers never evaluate at
// u in {0,1} and clamp to [tail_cut, 1-tail_cut] (see QuadratureConfig).
struct QuantileModel {
  std::string name;  // canonical display string, e.g. "exponential(lambda=2)"
  std::function<double(double)> quantile;  // Q(u)
  std::function<double(double)> density;   // q(u) = dQ/du, nonnegative
  // q expressed in the survivor coordinate s = 1 - u, i.e.
  // density_from_survivor(s) == density(1 - s), supplied when the family can
  // evaluate it without forming 1 - u (which loses all precision once u is
  // within machine epsilon of 1). Tail integrals prefer this hook: it lets
  // them follow slowly decaying densities far deeper than the u coordinate
  // can represent. Empty when no stable form exists.
  std::function<double(double)> density_from_survivor;
  double support_floor = 0.0;  // Q(0+)
  // Fractional entropy alpha -> E_alpha when the family admits a closed
  // form for its parameters; empty otherwise.
  std::function<double(double)> closed_form;
};

// Hazard rate in the quantile domain: H(u) = 1 / ((1-u) q(u)).
// Requires 0 < u < 1 and q(u) > 0 (a zero density means infinite hazard,
// which is signaled explicitly).
double hazard_quantile(const QuantileModel& model, double u);

}  // namespace qfcre
