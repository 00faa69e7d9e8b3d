// SPDX-License-Identifier: Apache-2.0

#include "qfcre/entropy.hpp"

#include <cmath>
#include <string>

#include "qfcre/errors.hpp"
#include "qfcre/format.hpp"

namespace qfcre {
namespace {

constexpr double kEulerGamma = 0.57721566490153286;

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::closed_form:
      return "closed_form";
    case Method::quadrature:
      return "quadrature";
    case Method::oracle:
      return "oracle";
  }
  return "unknown";
}

const char* profile_shape_name(ProfileShape s) {
  switch (s) {
    case ProfileShape::constant:
      return "constant";
    case ProfileShape::increasing:
      return "increasing";
    case ProfileShape::decreasing:
      return "decreasing";
    case ProfileShape::non_monotone:
      return "non_monotone";
  }
  return "unknown";
}

EntropyValue qfcre(const QuantileModel& m, FractionalOrder alpha,
                   const QuadratureConfig& cfg) {
  const double a = alpha;
  if (m.closed_form && !cfg.force_quadrature) {
    return {m.closed_form(a), a, Method::closed_form, 0.0};
  }
  const auto kernel = detail::fractional_kernel(m.density, a, 0.0, cfg,
                                                m.density_from_survivor);
  return {kernel.value, a, Method::quadrature, kernel.err};
}

EntropyValue qdfcre(const QuantileModel& m, FractionalOrder alpha, double u,
                    const QuadratureConfig& cfg) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw ValidationError("qdfcre: u must lie in [0,1), got u=" +
                          format_param(u));
  }
  const double a = alpha;
  const auto kernel = detail::fractional_kernel(m.density, a, u, cfg,
                                                m.density_from_survivor);
  return {(1.0 - u) * kernel.value, a, Method::quadrature,
          (1.0 - u) * kernel.err};
}

EntropyValue qcre(const QuantileModel& m, const QuadratureConfig& cfg) {
  return qfcre(m, FractionalOrder(1.0), cfg);
}

double quantile_shannon_entropy(const QuantileModel& m,
                                const QuadratureConfig& cfg) {
  return integrate_with_endpoint_ladder(
             [q = m.density](double p) { return std::log(q(p)); }, 0.0, 1.0,
             cfg)
      .value;
}

double shannon_bound_constant(FractionalOrder alpha) {
  return std::exp(-1.0 - kEulerGamma * double(alpha));
}

EscortFactorization escort_factorization(const QuantileModel& m, double c,
                                         FractionalOrder alpha,
                                         const QuadratureConfig& cfg) {
  if (!(c > 0.0)) {
    throw ValidationError("escort_factorization: c > 0 required, got c=" +
                          format_param(c));
  }
  EscortFactorization out;
  out.normalizer =
      integrate_with_endpoint_ladder(
          [q = m.density, c](double p) { return std::pow(q(p), 1.0 - c); },
          0.0, 1.0, cfg)
          .value;
  std::function<double(double)> weighted_surv;
  if (m.density_from_survivor) {
    weighted_surv = [qs = m.density_from_survivor, c](double s) {
      return std::pow(qs(s), c);
    };
  }
  out.weighted_entropy =
      detail::fractional_kernel(
          [q = m.density, c](double p) { return std::pow(q(p), c); },
          double(alpha), 0.0, cfg, weighted_surv)
          .value;
  out.product = out.normalizer * out.weighted_entropy;
  return out;
}

EntropyValue fcre_distribution_oracle(
    const std::function<double(double)>& survival, FractionalOrder alpha,
    double upper, const QuadratureConfig& cfg) {
  if (!(upper > 0.0) || !std::isfinite(upper)) {
    throw ValidationError(
        "fcre_distribution_oracle: upper must be positive and finite, got "
        "upper=" +
        format_param(upper));
  }
  const double a = alpha;
  const double s_end = survival(upper);
  // Crude tail bound: one more decay length's worth of the endpoint
  // integrand. The truncation point must make this negligible outright.
  const double tail_proxy =
      s_end <= 0.0
          ? 0.0
          : s_end * (1.0 + std::pow(-std::log(s_end), a)) * upper;
  if (!(tail_proxy <= 1e-8)) {
    throw ValidationError(
        "fcre_distribution_oracle: survival(upper)=" + format_param(s_end) +
        " leaves a non-negligible tail beyond upper=" + format_param(upper) +
        "; increase the truncation point");
  }
  const auto result = integrate_with_endpoint_ladder(
      [&survival, a](double x) {
        const double s = survival(x);
        if (!(s > 0.0)) return 0.0;
        if (s >= 1.0) return 0.0;  // -log(1) = 0 kills the integrand
        return s * std::pow(-std::log(s), a);
      },
      0.0, upper, cfg);
  return {result.value, a, Method::oracle, result.err};
}

DynamicProfile qdfcre_profile(const QuantileModel& m, FractionalOrder alpha,
                              const std::vector<double>& grid,
                              const QuadratureConfig& cfg) {
  if (grid.empty()) {
    throw ValidationError("qdfcre_profile: grid must not be empty");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] >= 0.0 && grid[i] < 1.0)) {
      throw ValidationError("qdfcre_profile: grid values must lie in [0,1), "
                            "got " +
                            format_param(grid[i]));
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw ValidationError(
          "qdfcre_profile: grid must be strictly increasing");
    }
  }
  DynamicProfile out;
  out.u = grid;
  out.values.reserve(grid.size());
  for (double u : grid) out.values.push_back(qdfcre(m, alpha, u, cfg));

  constexpr double kTol = 1e-9;
  bool any_up = false;
  bool any_down = false;
  for (std::size_t i = 1; i < out.values.size(); ++i) {
    const double d = out.values[i].value - out.values[i - 1].value;
    if (d > kTol) any_up = true;
    if (d < -kTol) any_down = true;
  }
  if (any_up && any_down) {
    out.shape = ProfileShape::non_monotone;
  } else if (any_up) {
    out.shape = ProfileShape::increasing;
  } else if (any_down) {
    out.shape = ProfileShape::decreasing;
  } else {
    out.shape = ProfileShape::constant;
  }
  return out;
}

}  // namespace qfcre
