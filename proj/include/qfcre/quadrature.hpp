// SPDX-License-Identifier: Apache-2.0
// Adaptive Gauss-Kronrod quadrature primitives shared by the entropy
// integrals, the escort normalizer, and cumulative quantile reconstruction.

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qfcre {

struct QuadratureConfig {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  // Maximum bisection depth of any subinterval before the integral is
  // declared non-convergent.
  int max_refinements = 60;
  // Unit-interval evaluation points are clamped to [tail_cut, 1 - tail_cut].
  // In the transformed domain t = -log(1-p) this truncates the tail at
  // t = -log(tail_cut); the geometric panel extension also stops once a
  // panel contributes less than abs_tol.
  double tail_cut = 1e-12;
  // When true, entropy operations ignore closed forms and always integrate.
  bool force_quadrature = false;
};

struct QuadResult {
  double value = 0.0;
  double err = 0.0;  // accumulated embedded error estimate
  std::size_t evaluations = 0;
};

// Adaptive integration of f over [a, b]: worst-first interval bisection with
// a Gauss-Kronrod 7/15 embedded error estimate. `breakpoints` seeds the
// initial partition (values outside (a,b) are ignored). Interval endpoints
// are never evaluated, so integrable endpoint singularities are tolerated.
// Throws DivergenceError when the refinement budget is exhausted or the
// integrand evaluates non-finite.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, const QuadratureConfig& cfg,
                              const std::vector<double>& breakpoints = {});

// integrate_adaptive with the initial partition geometrically clustered
// toward both endpoints, for integrands with integrable power/log endpoint
// singularities (unit-interval integrals against quantile densities).
QuadResult integrate_with_endpoint_ladder(
    const std::function<double(double)>& f, double a, double b,
    const QuadratureConfig& cfg);

// Q(u) = floor + integral_0^u q, evaluated on demand. Used for families
// whose quantile function has no elementary antiderivative.
std::function<double(double)> cumulative_quantile(
    std::function<double(double)> density, double floor_value,
    QuadratureConfig cfg = {});

namespace detail {

struct KernelResult {
  double value = 0.0;
  double err = 0.0;         // embedded estimate plus truncation allowance
  double clamp_mass = 0.0;  // |contribution| gathered where q was clamped
};

// Core transformed-domain integral
//     integral_0^inf e^{-2t} t^alpha q(1 - (1-u0) e^{-t}) dt
// with q evaluated no closer to 1 than 1 - tail_cut. For 0 < alpha < 1 the
// first panel [0,1] is computed under the substitution t = s^{1/(1-alpha/2)},
// which removes the infinite slope of t^alpha at t = 0. Panels extend
// geometrically (1,2], (2,4], ... until a panel contributes < abs_tol.
// Throws DivergenceError when the value is non-finite or when the clamped
// region contributes materially (the integral has no finite limit as the
// clamp tightens).
//
// When `q_from_survivor` is supplied (q as a function of s = 1 - p, see
// QuantileModel::density_from_survivor) the integrand is evaluated through
// it at s = (1-u0) e^{-t}, which is exact at any depth, and the clamp moves
// from tail_cut down to 1e-60: slowly decaying densities are then resolved
// to full accuracy instead of being truncated where the u coordinate runs
// out of precision.
KernelResult fractional_kernel(
    const std::function<double(double)>& q, double alpha, double u0,
    const QuadratureConfig& cfg,
    const std::function<double(double)>& q_from_survivor = {});

}  // namespace detail

}  // namespace qfcre
