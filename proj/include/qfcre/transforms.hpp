// SPDX-License-Identifier: Apache-2.0
// Model algebra: closure operations producing new quantile models.

#pragma once

#include <functional>
#include <string>

#include "qfcre/model.hpp"
#include "qfcre/quadrature.hpp"

namespace qfcre {

// Y = aX + b with a > 0, b >= 0: Q_Y = a Q + b, q_Y = a q. The closed form
// scales by a (the shift never enters the entropy).
QuantileModel affine_transform(const QuantileModel& m, double a, double b);

// Quantile-domain sum: Q = Q1 + Q2, q = q1 + q2. Entropy is additive across
// the composition.
QuantileModel sum_compose(const QuantileModel& m1, const QuantileModel& m2);

// Quantile-domain product of positive models: Q = Q1 Q2,
// q = Q1 q2 + Q2 q1. Positivity of both quantile functions is probed on a
// grid at construction.
QuantileModel product_compose(const QuantileModel& m1, const QuantileModel& m2);

// Y = 1/X: Q_Y(u) = 1/Q(1-u), q_Y(u) = q(1-u)/Q(1-u)^2. Requires Q > 0 on
// (0,1) (probed). Applying it twice reproduces the original model.
QuantileModel reciprocal_transform(const QuantileModel& m);

// Proportional hazards with parameter theta > 0:
// Q_Y(u) = Q_X(1-(1-u)^{1/theta}),
// q_Y(u) = (1/theta) q_X(1-(1-u)^{1/theta}) (1-u)^{1/theta - 1}.
QuantileModel phm_transform(const QuantileModel& m, double theta);

// Y = zeta(X) for an increasing differentiable zeta: Q_Y = zeta(Q_X),
// q_Y = q_X * zeta'(Q_X). The caller supplies zeta' explicitly (no numerical
// differentiation); positivity of zeta' is probed on a grid.
QuantileModel monotone_transform(const QuantileModel& m,
                                 std::function<double(double)> zeta,
                                 std::function<double(double)> zeta_prime,
                                 const std::string& label);

// Escort reweighting of order c > 0: q_e(u) = q(u)^c N(c) with the
// normalizer N(c) = integral_0^1 q(p)^{1-c} dp. The quantile function is
// reconstructed by on-demand quadrature of q_e anchored at the original
// support floor, so escort(m, 1) reproduces m exactly. A divergent
// normalizer is signaled as DivergenceError.
QuantileModel escort_transform(const QuantileModel& m, double c,
                               const QuadratureConfig& cfg = {});

}  // namespace qfcre
