// SPDX-License-Identifier: Apache-2.0

#include "qfcre/transforms.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qfcre/errors.hpp"
#include "qfcre/format.hpp"
#include "qfcre/quadrature.hpp"

namespace qfcre {
namespace {

// Interior probe points used to validate positivity / monotonicity
// preconditions before a transform is accepted.
std::vector<double> probe_grid() {
  std::vector<double> grid;
  grid.reserve(99);
  for (int i = 1; i <= 99; ++i) grid.push_back(i / 100.0);
  return grid;
}

// Largest value of the quantile function, used when a transform flips the
// support.  Divergence of a numerically integrated quantile function means
// the support is unbounded above.
double upper_support(const QuantileModel& m) {
  try {
    return m.quantile(1.0);
  } catch (const DivergenceError&) {
    return std::numeric_limits<double>::infinity();
  }
}

}  // namespace

double hazard_quantile(const QuantileModel& m, double u) {
  if (!(u > 0.0 && u < 1.0)) {
    throw ValidationError("hazard_quantile: u must lie in (0,1), got u=" +
                          format_param(u));
  }
  const double q = m.density(u);
  if (!(q > 0.0) || !std::isfinite(q)) {
    throw ValidationError("hazard_quantile: quantile density of " + m.name +
                          " is not positive and finite at u=" + format_param(u));
  }
  return 1.0 / ((1.0 - u) * q);
}

// Y = aX + b: `a` scales, `b` shifts.
QuantileModel affine_transform(const QuantileModel& m, double a, double b) {
  if (!(a > 0.0)) {
    throw ValidationError("affine_transform: a > 0 required, got a=" +
                          format_param(a));
  }
  if (!(b >= 0.0)) {
    throw ValidationError("affine_transform: b >= 0 required, got b=" +
                          format_param(b));
  }
  QuantileModel out;
  out.name = "affine(" + m.name + ",a=" + format_param(a) +
             ",b=" + format_param(b) + ")";
  out.quantile = [Q = m.quantile, a, b](double u) { return a * Q(u) + b; };
  out.density = [q = m.density, a](double u) { return a * q(u); };
  if (m.density_from_survivor) {
    out.density_from_survivor = [qs = m.density_from_survivor, a](double s) {
      return a * qs(s);
    };
  }
  out.support_floor = a * m.support_floor + b;
  if (m.closed_form) {
    out.closed_form = [cf = m.closed_form, a](double alpha) {
      return a * cf(alpha);
    };
  }
  return out;
}

QuantileModel sum_compose(const QuantileModel& m1, const QuantileModel& m2) {
  QuantileModel out;
  out.name = "sum(" + m1.name + "," + m2.name + ")";
  out.quantile = [Q1 = m1.quantile, Q2 = m2.quantile](double u) {
    return Q1(u) + Q2(u);
  };
  out.density = [q1 = m1.density, q2 = m2.density](double u) {
    return q1(u) + q2(u);
  };
  if (m1.density_from_survivor && m2.density_from_survivor) {
    out.density_from_survivor = [qs1 = m1.density_from_survivor,
                                 qs2 = m2.density_from_survivor](double s) {
      return qs1(s) + qs2(s);
    };
  }
  out.support_floor = m1.support_floor + m2.support_floor;
  if (m1.closed_form && m2.closed_form) {
    out.closed_form = [c1 = m1.closed_form, c2 = m2.closed_form](double alpha) {
      return c1(alpha) + c2(alpha);
    };
  }
  return out;
}

QuantileModel product_compose(const QuantileModel& m1, const QuantileModel& m2) {
  for (double u : probe_grid()) {
    if (!(m1.quantile(u) >= 0.0) || !(m2.quantile(u) >= 0.0)) {
      throw ValidationError(
          "product_compose: both quantile functions must be nonnegative; "
          "violated at u=" +
          format_param(u));
    }
  }
  QuantileModel out;
  out.name = "product(" + m1.name + "," + m2.name + ")";
  out.quantile = [Q1 = m1.quantile, Q2 = m2.quantile](double u) {
    return Q1(u) * Q2(u);
  };
  out.density = [Q1 = m1.quantile, q1 = m1.density, Q2 = m2.quantile,
                 q2 = m2.density](double u) {
    return q1(u) * Q2(u) + Q1(u) * q2(u);
  };
  out.support_floor = m1.support_floor * m2.support_floor;
  return out;
}

QuantileModel reciprocal_transform(const QuantileModel& m) {
  for (double u : probe_grid()) {
    if (!(m.quantile(u) > 0.0)) {
      throw ValidationError(
          "reciprocal_transform: quantile function must be strictly positive; "
          "violated at u=" +
          format_param(u));
    }
  }
  QuantileModel out;
  out.name = "reciprocal(" + m.name + ")";
  out.quantile = [Q = m.quantile](double u) { return 1.0 / Q(1.0 - u); };
  out.density = [Q = m.quantile, q = m.density](double u) {
    const double base = Q(1.0 - u);
    return q(1.0 - u) / (base * base);
  };
  // The flipped argument 1 - u is exactly the survivor coordinate, where the
  // base model's own u-side functions evaluate without any cancellation.
  out.density_from_survivor = [Q = m.quantile, q = m.density](double s) {
    const double base = Q(s);
    return q(s) / (base * base);
  };
  const double top = upper_support(m);
  out.support_floor = (std::isfinite(top) && top > 0.0) ? 1.0 / top : 0.0;
  return out;
}

QuantileModel phm_transform(const QuantileModel& m, double theta) {
  if (!(theta > 0.0)) {
    throw ValidationError("phm_transform: theta > 0 required, got theta=" +
                          format_param(theta));
  }
  QuantileModel out;
  out.name = "phm(" + m.name + ",theta=" + format_param(theta) + ")";
  // Proportionally scaled hazard: the transformed survival function is the
  // base survival raised to theta, so percentiles map through
  // u -> 1 - (1-u)^{1/theta}.
  auto base_u = [theta](double u) {
    return -std::expm1(std::log1p(-u) / theta);
  };
  out.quantile = [Q = m.quantile, base_u](double u) { return Q(base_u(u)); };
  out.density = [q = m.density, base_u, theta](double u) {
    return q(base_u(u)) * std::pow(1.0 - u, 1.0 / theta - 1.0) / theta;
  };
  // The base model sees survivor s^{1/theta}. For theta < 1 that exponent
  // would push tiny survivors below double range, so the stable form is only
  // offered when the mapping does not deepen the tail.
  if (m.density_from_survivor && theta >= 1.0) {
    out.density_from_survivor = [qs = m.density_from_survivor,
                                 theta](double s) {
      const double base_s = std::pow(s, 1.0 / theta);
      return qs(base_s) * (base_s / s) / theta;
    };
  }
  out.support_floor = m.support_floor;
  return out;
}

QuantileModel monotone_transform(const QuantileModel& m,
                                 std::function<double(double)> zeta,
                                 std::function<double(double)> zeta_prime,
                                 const std::string& label) {
  for (double u : probe_grid()) {
    const double slope = zeta_prime(m.quantile(u));
    if (!(slope > 0.0) || !std::isfinite(slope)) {
      throw ValidationError("monotone_transform(" + label +
                            "): derivative must be positive and finite along "
                            "the support; violated at u=" +
                            format_param(u));
    }
  }
  QuantileModel out;
  out.name = label + "(" + m.name + ")";
  out.quantile = [Q = m.quantile, zeta](double u) { return zeta(Q(u)); };
  out.density = [Q = m.quantile, q = m.density, zeta_prime](double u) {
    return zeta_prime(Q(u)) * q(u);
  };
  out.support_floor = zeta(m.support_floor);
  return out;
}

QuantileModel escort_transform(const QuantileModel& m, double c,
                               const QuadratureConfig& cfg) {
  if (!(c > 0.0)) {
    throw ValidationError("escort_transform: c > 0 required, got c=" +
                          format_param(c));
  }
  if (c == 1.0) return m;  // q^1 with unit normalizer is the model itself.
  const double normalizer =
      integrate_with_endpoint_ladder(
          [q = m.density, c](double s) { return std::pow(q(s), 1.0 - c); },
          0.0, 1.0, cfg)
          .value;
  QuantileModel out;
  out.name = "escort(" + m.name + ",c=" + format_param(c) + ")";
  out.density = [q = m.density, c, normalizer](double u) {
    return normalizer * std::pow(q(u), c);
  };
  if (m.density_from_survivor) {
    out.density_from_survivor = [qs = m.density_from_survivor, c,
                                 normalizer](double s) {
      return normalizer * std::pow(qs(s), c);
    };
  }
  out.quantile = cumulative_quantile(out.density, m.support_floor, cfg);
  out.support_floor = m.support_floor;
  return out;
}

}  // namespace qfcre
