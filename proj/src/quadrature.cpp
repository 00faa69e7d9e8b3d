// SPDX-License-Identifier: Apache-2.0

#include "qfcre/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <utility>

#include "qfcre/errors.hpp"
#include "qfcre/format.hpp"

namespace qfcre {
namespace {

// Gauss-Kronrod 7/15 abscissae (positive half) and weights on [-1, 1].
// The 7-point Gauss rule sits on the odd-indexed abscissae plus the center.
constexpr double kXgk[8] = {
    0.99145537112081263920685469752633,
    0.94910791234275852452618968404785,
    0.86486442335976907278971278864093,
    0.74153118559939443986386477328079,
    0.58608723546769113029414483825873,
    0.40584515137739716690660641207696,
    0.20778495500789846760068940377324,
    0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct PanelEstimate {
  double value = 0.0;
  double err = 0.0;
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b,
                   std::size_t& evaluations) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  // Cells shrink to a few ulps while chasing endpoint singularities, and a
  // node can then round onto a boundary the open rule promises never to
  // evaluate. Clamp nodes to the innermost representable values.
  const double lo = std::nextafter(a, b);
  const double hi = std::nextafter(b, a);
  const auto at = [&](double x) {
    return lo <= hi ? f(std::min(std::max(x, lo), hi)) : f(x);
  };
  const double fc = at(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = at(center - dx);
    const double f2 = at(center + dx);
    kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  evaluations += 15;
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err = 0.0;
  int depth = 0;
  bool operator<(const Segment& other) const { return err < other.err; }
};

void check_config(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_refinements < 1) {
    throw ValidationError(
        "quadrature config: rel_tol > 0, abs_tol > 0, max_refinements >= 1 "
        "required");
  }
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double a,
                              double b, const QuadratureConfig& cfg,
                              const std::vector<double>& breakpoints) {
  check_config(cfg);
  QuadResult out;
  if (a == b) return out;
  if (!(a < b)) throw ValidationError("integrate_adaptive: requires a <= b");

  std::vector<double> edges{a, b};
  for (double x : breakpoints) {
    if (x > a && x < b) edges.push_back(x);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::priority_queue<Segment> active;
  double total = 0.0;
  double err_total = 0.0;
  auto seed = [&](double lo, double hi, int depth) {
    const PanelEstimate p = gk15(f, lo, hi, out.evaluations);
    if (!std::isfinite(p.value)) {
      throw DivergenceError("quadrature: integrand evaluated non-finite on [" +
                                num17(lo) + ", " + num17(hi) + "]",
                            total, err_total);
    }
    total += p.value;
    err_total += p.err;
    active.push({lo, hi, p.value, p.err, depth});
  };
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    seed(edges[i], edges[i + 1], 0);
  }

  const std::size_t max_segments = 4096 + edges.size();
  double frozen_err = 0.0;  // segments at floating-point resolution
  while (!active.empty()) {
    const double target = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (err_total <= target) break;
    if (active.size() >= max_segments) {
      throw DivergenceError(
          "quadrature: segment budget exhausted (error estimate " +
              num17(err_total) + ", target " + num17(target) + ")",
          total, err_total);
    }
    Segment worst = active.top();
    if (worst.err <= frozen_err && frozen_err > target) {
      // All remaining error sits in unsplittable segments.
      throw DivergenceError(
          "quadrature: residual error " + num17(err_total) +
              " cannot be reduced below target " + num17(target),
          total, err_total);
    }
    active.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    // Split only when each child still has interior points of its own;
    // thinner slivers keep their estimate as unavoidable residual error.
    if (!(mid > worst.a && mid < worst.b) ||
        !(std::nextafter(worst.a, mid) < mid) ||
        !(std::nextafter(mid, worst.b) < worst.b)) {
      frozen_err += worst.err;  // cannot bisect further; keep its estimate
      continue;
    }
    if (worst.depth >= cfg.max_refinements) {
      throw DivergenceError(
          "quadrature: refinement depth " + std::to_string(cfg.max_refinements) +
              " exhausted near [" + num17(worst.a) + ", " + num17(worst.b) + "]",
          total, err_total);
    }
    total -= worst.value;
    err_total -= worst.err;
    seed(worst.a, mid, worst.depth + 1);
    seed(mid, worst.b, worst.depth + 1);
  }

  out.value = total;
  out.err = err_total;
  return out;
}

QuadResult integrate_with_endpoint_ladder(
    const std::function<double(double)>& f, double a, double b,
    const QuadratureConfig& cfg) {
  const double width = b - a;
  std::vector<double> pts;
  for (double d : {1e-12, 1e-9, 1e-6, 1e-3, 0.05, 0.25}) {
    pts.push_back(a + width * d);
    pts.push_back(b - width * d);
  }
  return integrate_adaptive(f, a, b, cfg, pts);
}

std::function<double(double)> cumulative_quantile(
    std::function<double(double)> density, double floor_value,
    QuadratureConfig cfg) {
  return [density = std::move(density), floor_value, cfg](double u) {
    if (u <= 0.0) return floor_value;
    if (!(u < 1.0)) {
      throw ValidationError("cumulative quantile: u must lie in (0,1)");
    }
    return floor_value +
           integrate_with_endpoint_ladder(density, 0.0, u, cfg).value;
  };
}

namespace detail {

KernelResult fractional_kernel(
    const std::function<double(double)>& q, double alpha, double u0,
    const QuadratureConfig& cfg,
    const std::function<double(double)>& q_from_survivor) {
  check_config(cfg);
  if (!(cfg.tail_cut > 0.0 && cfg.tail_cut < 0.5)) {
    throw ValidationError("quadrature config: tail_cut must lie in (0, 0.5)");
  }
  const double survivor = 1.0 - u0;  // 1 - u0
  // Through the survivor coordinate the density is evaluable exactly at any
  // depth, so the clamp only serves divergence detection and can sit far
  // deeper than the u coordinate could ever represent.
  const double cut =
      q_from_survivor ? std::min(cfg.tail_cut, 1e-60) : cfg.tail_cut;
  const double p_cap = 1.0 - cut;
  // q is frozen at p_cap (s frozen at cut) for t beyond this threshold.
  const double t_clamp = std::log(survivor / cut);

  const auto integrand = [&](double t) {
    const double weight = std::exp(-2.0 * t) * std::pow(t, alpha);
    if (weight == 0.0) return 0.0;
    // The two coordinates lose precision at opposite ends: p resolves small
    // t exactly (expm1/log1p) but saturates once 1 - p falls under epsilon,
    // while s resolves the far tail exactly but rounds to 1 for t below
    // epsilon. Evaluate each where it is exact.
    if (q_from_survivor && t > 1.0) {
      double s = survivor * std::exp(-t);  // 1 - p, no cancellation
      if (s < cut) s = cut;
      return weight * q_from_survivor(s);
    }
    // p = 1 - (1-u0) e^{-t}, written to stay accurate for small t.
    double p = u0 + survivor * (-std::expm1(-t));
    if (p > p_cap) p = p_cap;
    return weight * q(p);
  };

  KernelResult out;
  auto add = [&](const QuadResult& r) {
    out.value += r.value;
    out.err += r.err;
  };
  // Each panel only needs to resolve its share of the whole integral, not a
  // relative fraction of its own (possibly tiny) value. Without this, far
  // tail panels demand absolute accuracy below the roundoff floor of
  // evaluating q at p close to 1.
  auto panel_cfg = [&]() {
    QuadratureConfig c = cfg;
    c.abs_tol =
        std::max(cfg.abs_tol, 0.1 * cfg.rel_tol * std::abs(out.value));
    return c;
  };

  // First panel [0, 1]. For fractional orders strictly inside (0,1) the
  // factor t^alpha has infinite slope at 0; substituting t = s^m with
  // m = 1/(1 - alpha/2) yields an integrand with Hoelder exponent >= 1
  // whenever q stays bounded near p = u0. Densities that are themselves
  // singular there (for example t^B factors with B < 0) are still handled:
  // the endpoint ladder pre-splits the panel so the bisection chase toward
  // the singular end starts from a 1e-12-wide cell.
  if (t_clamp > 0.0) {
    const double first_hi = std::min(1.0, t_clamp);
    if (alpha > 0.0 && alpha < 1.0) {
      const double m = 1.0 / (1.0 - 0.5 * alpha);
      const double s_hi = std::pow(first_hi, 1.0 / m);
      const auto smoothed = [&](double s) {
        return m * std::pow(s, m - 1.0) * integrand(std::pow(s, m));
      };
      add(integrate_with_endpoint_ladder(smoothed, 0.0, s_hi, cfg));
    } else {
      add(integrate_with_endpoint_ladder(integrand, 0.0, first_hi, cfg));
    }
  }

  // Geometric extension with a panel edge pinned at the clamp threshold so
  // mass gathered from the clamped region is accounted separately.
  double lo = std::max(std::min(1.0, t_clamp), 0.0);
  double next_power = 2.0;
  while (next_power <= lo) next_power *= 2.0;
  const double t_max = 512.0;  // exp(-2t) underflows far earlier
  while (lo < t_max) {
    double hi = std::min(next_power, t_max);
    if (lo < t_clamp && t_clamp < hi) hi = t_clamp;
    const bool clamped_panel = lo >= t_clamp;
    const QuadResult r = integrate_adaptive(integrand, lo, hi, panel_cfg());
    add(r);
    if (clamped_panel) out.clamp_mass += std::abs(r.value);
    const bool stopped_at_clamp = (hi == t_clamp && hi != next_power);
    lo = hi;
    if (hi == next_power) next_power *= 2.0;
    if (!stopped_at_clamp && std::abs(r.value) < cfg.abs_tol && lo >= 4.0) {
      break;
    }
  }

  if (!std::isfinite(out.value)) {
    throw DivergenceError("entropy integral evaluated non-finite", out.value,
                          out.err);
  }
  // A convergent integral gains essentially nothing from the region where q
  // is frozen at its clamped value; material mass there means the integral
  // grows without bound as the clamp tightens.
  const double clamp_budget =
      std::max(1e3 * cfg.abs_tol, 1e-4 * std::abs(out.value));
  if (out.clamp_mass > clamp_budget) {
    throw DivergenceError(
        "entropy integral does not converge: the clamped tail near p = 1 "
        "contributes " +
            num17(out.clamp_mass) + " of " + num17(out.value),
        out.value, out.err + out.clamp_mass);
  }
  out.err += out.clamp_mass + 2.0 * cfg.abs_tol;  // truncation allowance
  return out;
}

}  // namespace detail

}  // namespace qfcre
