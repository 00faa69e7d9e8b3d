// SPDX-License-Identifier: Apache-2.0
// Acceptance harness: each criterion prints its sub-checks and exactly one
// summary line "acceptance N: PASS|FAIL [...]". Run all criteria (no
// arguments) or a single one with --criterion N. Exit status 0 iff every
// criterion that ran passed, including its runtime budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qfcre/catalog.hpp"
#include "qfcre/chaos.hpp"
#include "qfcre/entropy.hpp"
#include "qfcre/errors.hpp"
#include "qfcre/estimator.hpp"
#include "qfcre/finance.hpp"
#include "qfcre/simulation.hpp"
#include "qfcre/transforms.hpp"
#include "qfcre/verify.hpp"

using namespace qfcre;

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

struct Reporter {
  bool ok = true;
  void check(bool pass, const std::string& what) {
    std::cout << (pass ? "    ok   " : "    FAIL ") << what << "\n";
    ok = ok && pass;
  }
};

std::vector<double> alpha_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 10; ++i) grid.push_back(i / 10.0);
  return grid;
}

QuadratureConfig forced() {
  QuadratureConfig cfg;
  cfg.force_quadrature = true;
  return cfg;
}

// ---------------------------------------------------------------- criterion 1

void criterion_closed_forms(Reporter& r) {
  const std::vector<QuantileModel> models = {
      make_uniform(1.0),
      make_uniform(2.5),
      make_exponential(1.0),
      make_exponential(2.0),
      make_weibull_family(0.5, 0.0),
      make_weibull_family(1.0, 0.5),
      make_weibull_family(1.5, -0.5),
      make_pareto1(0.25),
      make_pareto1(0.5),
      make_lambda_family(2.0, 0.0, 0.0),
  };
  for (const auto& m : models) {
    double worst = 0.0;
    for (double a : alpha_grid()) {
      const double numeric = qfcre::qfcre(m, a, forced()).value;
      const double closed = m.closed_form(a);
      worst = std::max(worst, std::abs(numeric - closed) / std::abs(closed));
    }
    r.check(worst <= 1e-5,
            m.name + ": worst relative deviation " + fmt(worst) +
                " over 10 orders (tolerance 1e-5)");
  }

  // Proportional-hazards example: theta = 2 on the A=0.5, B=0 family has
  // entropy theta^alpha Gamma(alpha+1) / (theta - A + 1)^{alpha+1}.
  const auto phm = phm_transform(make_weibull_family(0.5, 0.0), 2.0);
  double worst = 0.0;
  for (double a : alpha_grid()) {
    const double numeric = qfcre::qfcre(phm, a, forced()).value;
    const double closed =
        std::pow(2.0, a) * std::tgamma(a + 1.0) / std::pow(2.5, a + 1.0);
    worst = std::max(worst, std::abs(numeric - closed) / std::abs(closed));
  }
  r.check(worst <= 1e-5, "phm(weibull_family(A=0.5,B=0),theta=2): worst "
                         "relative deviation " +
                             fmt(worst));

  // Spot value: lambda_family(2,0,0) at alpha = 0.75 equals
  // 3 Gamma(3/4) / 2^{11/4} = 0.546477848... .
  const double spot = qfcre::qfcre(make_lambda_family(2.0, 0.0, 0.0), 0.75).value;
  const double exact = 3.0 * std::tgamma(0.75) / std::pow(2.0, 2.75);
  r.check(std::abs(spot - exact) <= 1e-5 * exact,
          "lambda_family(2,0,0) at alpha=0.75: " + fmt(spot) + " vs exact " +
              fmt(exact));
}

// ---------------------------------------------------------------- criterion 2

void criterion_power_pareto_study(Reporter& r) {
  const auto model = make_power_pareto(1.5, 2.0, 0.25);
  const double truth = qfcre::qfcre(model, 0.25).value;
  // Independent series value for the same integral (binomial expansion on
  // the transformed domain), printed so the deviation is attributable.
  const double series =
      1.5 * std::tgamma(1.25) *
      (0.25 / std::pow(0.75, 1.25) + 1.5 / std::pow(1.75, 1.25) -
       1.75 / std::pow(2.75, 1.25));
  r.check(std::abs(truth - series) <= 1e-8,
          "quadrature matches the independent series expansion: " +
              fmt(truth) + " vs " + fmt(series));
  r.check(std::abs(truth - 0.8235) <= 1e-4,
          "tabulated reference true value 0.8235 +- 1e-4: computed " +
              fmt(truth) + " (difference " + fmt(truth - 0.8235) +
              "; the tabulated value appears to be a transcription error)");

  const std::vector<std::size_t> sizes = {50, 100, 250, 500, 1000};
  const auto report = bias_mse_study(model, 0.25, sizes, 5000, 7);
  const double reference_means[] = {0.7136, 0.7564, 0.7914, 0.8042, 0.8133};
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const double mean = report.rows[i].mean_estimate;
    r.check(std::abs(mean - reference_means[i]) <= 0.01,
            "mean estimate at n=" + std::to_string(sizes[i]) + ": " +
                fmt(mean) + " within 0.01 of " + fmt(reference_means[i]));
  }
  bool bias_monotone = true, mse_monotone = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    bias_monotone = bias_monotone && std::abs(report.rows[i].bias) <
                                         std::abs(report.rows[i - 1].bias);
    mse_monotone = mse_monotone && report.rows[i].mse < report.rows[i - 1].mse;
  }
  r.check(bias_monotone, "|bias| strictly decreasing in n");
  r.check(mse_monotone, "MSE strictly decreasing in n");
}

// ---------------------------------------------------------------- criterion 3

void criterion_govindarajulu_study(Reporter& r) {
  const auto model = make_govindarajulu(1.0, 2.0, 2.0);
  const double truth = qfcre::qfcre(model, 0.75).value;
  r.check(std::abs(truth - 0.6380) <= 1e-4,
          "tabulated reference true value 0.6380 +- 1e-4: computed " +
              fmt(truth));

  const auto report = bias_mse_study(model, 0.75, {1000}, 5000, 7);
  const double bias = report.rows[0].bias;
  const double mse = report.rows[0].mse;
  r.check(std::abs(bias - 0.0053) <= 0.003,
          "bias at n=1000: " + fmt(bias) + " within 0.003 of 0.0053");
  r.check(mse >= 0.5 * 5.7120e-5 && mse <= 1.5 * 5.7120e-5,
          "MSE at n=1000: " + fmt(mse) + " within 50% of 5.7120e-5");
}

// ---------------------------------------------------------------- criterion 4

void criterion_property_suite(Reporter& r) {
  const auto grid = alpha_grid();
  const auto catalog = standard_catalog();

  // Entropies of every catalog model over the order grid (default method:
  // closed form when available, adaptive quadrature otherwise).
  std::vector<std::vector<double>> E(catalog.size());
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    for (double a : grid) E[i].push_back(qfcre::qfcre(catalog[i], a).value);
  }

  {  // Nonnegativity.
    bool all = true;
    std::string detail;
    for (std::size_t i = 0; i < catalog.size() && all; ++i) {
      for (std::size_t k = 0; k < grid.size(); ++k) {
        if (!(E[i][k] >= -1e-12)) {
          all = false;
          detail = catalog[i].name + " at alpha=" + fmt(grid[k]);
          break;
        }
      }
    }
    r.check(all, "nonnegativity of the entropy over the catalog" +
                     (all ? "" : (": violated by " + detail)));
  }

  {  // Scale equivariance (shift drops out, scale multiplies through).
    double worst = 0.0;
    std::string where;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const auto scaled = affine_transform(catalog[i], 2.5, 1.5);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double lhs = qfcre::qfcre(scaled, grid[k]).value;
        const double rel = std::abs(lhs - 2.5 * E[i][k]) / (2.5 * E[i][k]);
        if (rel > worst) {
          worst = rel;
          where = catalog[i].name;
        }
      }
    }
    r.check(worst <= 1e-8, "scale equivariance under aX+b: worst relative "
                           "deviation " +
                               fmt(worst) + " (" + where + ")");
  }

  {  // Additivity over quantile-domain sums, and domination of components.
    double worst = 0.0;
    bool dominated = true;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const std::size_t j = (i + 4) % catalog.size();
      const auto sum = sum_compose(catalog[i], catalog[j]);
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double lhs = qfcre::qfcre(sum, grid[k]).value;
        const double rhs = E[i][k] + E[j][k];
        worst = std::max(worst, std::abs(lhs - rhs) / rhs);
        dominated =
            dominated && lhs >= std::max(E[i][k], E[j][k]) - 1e-10;
      }
    }
    r.check(worst <= 1e-8,
            "additivity over sums: worst relative deviation " + fmt(worst));
    r.check(dominated, "sum entropy dominates both components");
  }

  {  // Fractional power bound E_alpha <= (E_1)^alpha.
    bool all = true;
    std::string detail;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
      const double e1 = qfcre::qfcre(catalog[i], 1.0).value;
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double bound = std::pow(e1, grid[k]);
        if (E[i][k] > bound + 1e-8 * std::max(1.0, bound)) {
          if (all) {
            detail = catalog[i].name + " at alpha=" + fmt(grid[k]) + ": " +
                     fmt(E[i][k]) + " > " + fmt(bound) +
                     " (the bound presumes a unit-scale entropy; it cannot "
                     "hold for families with E_1 > 1)";
          }
          all = false;
        }
      }
    }
    r.check(all, "fractional power bound E_alpha <= (E_1)^alpha over the "
                 "catalog" +
                     (all ? "" : (": violated by " + detail)));
  }

  {  // Hazard ordering implies entropy ordering: exponential(2) vs (1).
    bool premise = true;
    for (int i = 1; i <= 99; ++i) {
      const double u = i / 100.0;
      premise = premise && hazard_quantile(make_exponential(2.0), u) >=
                               hazard_quantile(make_exponential(1.0), u) - 1e-12;
    }
    bool conclusion = true;
    for (double a : grid) {
      conclusion = conclusion && qfcre::qfcre(make_exponential(2.0), a).value <=
                                     qfcre::qfcre(make_exponential(1.0), a).value + 1e-12;
    }
    r.check(premise && conclusion,
            "uniformly larger hazard gives smaller entropy: exponential(2) "
            "vs exponential(1)");
  }

  {  // Dispersive ordering implies entropy ordering: uniform(1) vs (2).
    bool premise = true;
    double prev = 0.0;
    for (int i = 1; i <= 99; ++i) {
      const double u = i / 100.0;
      const double gap =
          make_uniform(2.0).quantile(u) - make_uniform(1.0).quantile(u);
      premise = premise && gap >= prev;
      prev = gap;
    }
    bool conclusion = true;
    for (double a : grid) {
      conclusion = conclusion && qfcre::qfcre(make_uniform(1.0), a).value <=
                                     qfcre::qfcre(make_uniform(2.0), a).value + 1e-12;
    }
    r.check(premise && conclusion,
            "dispersive ordering gives entropy ordering: uniform(1) vs "
            "uniform(2)");
  }

  {  // Residual entropies ordered uniformly although hazards cross.
    bool ordered = true;
    std::string detail;
    for (double a : grid) {
      for (int i = 1; i <= 99 && ordered; ++i) {
        const double u = i / 100.0;
        const double lhs = qdfcre(make_uniform(2.0), a, u).value;
        const double rhs = qdfcre(make_exponential(1.0), a, u).value;
        if (!(lhs <= rhs + 1e-10)) {
          ordered = false;
          detail = " violated at u=" + fmt(u) + ", alpha=" + fmt(a);
        }
      }
    }
    r.check(ordered, "residual entropy of uniform(2) never exceeds "
                     "exponential(1) on the 99-point grid" +
                         detail);

    bool flips = true;
    for (int i = 1; i <= 99; ++i) {
      const double u = i / 100.0;
      const double hu = hazard_quantile(make_uniform(2.0), u);
      const double he = hazard_quantile(make_exponential(1.0), u);
      if (u < 0.5) {
        flips = flips && hu < he;
      } else if (u > 0.5) {
        flips = flips && hu > he;
      } else {
        flips = flips && std::abs(hu - he) <= 1e-9;
      }
    }
    r.check(flips, "their hazard ordering flips exactly at u = 1/2");
  }
}

// ---------------------------------------------------------------- criterion 5

void criterion_estimator_invariants(Reporter& r) {
  std::mt19937_64 gen(20240901);
  const auto grid = alpha_grid();
  std::size_t shift_fail = 0, scale_fail = 0, nonneg_fail = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + gen() % 399;
    std::vector<double> base(n), shifted(n), scaled(n);
    for (std::size_t i = 0; i < n; ++i) {
      base[i] = double(gen() % 32768) / 16.0;  // dyadic: addition is exact
      shifted[i] = base[i] + 21.25;
      scaled[i] = base[i] * 3.7;
    }
    const double a = grid[std::size_t(trial) % grid.size()];
    const SampleData sb(base), sh(shifted), sc(scaled);

    if (estimate_qfcre(sb, a).value != estimate_qfcre(sh, a).value) {
      ++shift_fail;
    }
    for (auto convention :
         {SpacingConvention::gaps, SpacingConvention::zero_baseline}) {
      const double one = estimate_qfcre(sb, a, convention).value;
      const double two = estimate_qfcre(sc, a, convention).value;
      if (std::abs(two - 3.7 * one) >
          1e-12 * std::max({1.0, std::abs(two), 3.7 * std::abs(one)})) {
        ++scale_fail;
      }
      if (!(one >= 0.0)) ++nonneg_fail;
    }
  }
  r.check(shift_fail == 0, "shift invariance bit-exact on 1000 samples (" +
                               std::to_string(shift_fail) + " failures)");
  r.check(scale_fail == 0,
          "scale equivariance within 1e-12 on 1000 samples, both "
          "conventions (" +
              std::to_string(scale_fail) + " failures)");
  r.check(nonneg_fail == 0, "nonnegativity on 1000 samples (" +
                                std::to_string(nonneg_fail) + " failures)");
}

// ---------------------------------------------------------------- criterion 6

void criterion_chaos(Reporter& r) {
  const auto rows =
      chaos_entropy_sweep({1.0, 1.5, 2.0, 2.5, 3.5, 4.0}, 0.1, 2000, 0.5);
  const double quiet = std::max(
      {rows[0].entropy, rows[1].entropy, rows[2].entropy, rows[3].entropy});
  r.check(rows[5].entropy > rows[4].entropy,
          "entropy(a=4) = " + fmt(rows[5].entropy) + " > entropy(a=3.5) = " +
              fmt(rows[4].entropy));
  r.check(rows[4].entropy > quiet,
          "entropy(a=3.5) exceeds every fixed-point/periodic regime (max " +
              fmt(quiet) + ")");
}

// ---------------------------------------------------------------- criterion 7

std::string resolve_price_csv() {
  if (const char* env = std::getenv("QFCRE_DJIA_CSV")) return env;
  for (const char* candidate : {"data/djia.csv", "../data/djia.csv"}) {
    if (std::filesystem::exists(candidate)) return candidate;
  }
  return "";
}

void criterion_finance(Reporter& r) {
  const std::string path = resolve_price_csv();
  if (!path.empty()) {
    const auto prices = load_prices_file(path);
    const auto table =
        period_entropy(to_return_series(prices), PartitionSpec::yearly(), {0.2});
    std::string best_year;
    double best = -1.0;
    std::string all;
    for (const auto& row : table.rows) {
      if (row.entropy > best) {
        best = row.entropy;
        best_year = row.period;
      }
      all += row.period + "=" + fmt(row.entropy) + " ";
    }
    r.check(best_year == "2018",
            "yearly entropy at alpha=0.2 from '" + path + "' is maximal in " +
                best_year + " (" + all + ")");
    r.check(best > 0.010,
            "maximal yearly entropy " + fmt(best) + " exceeds 0.010");
    return;
  }

  // No dataset available: synthetic two-regime fallback. Exponential draws
  // with scale 1 then scale 3; the volatile regime's windows must all sit
  // strictly above the quiet regime's.
  std::mt19937_64 gen(12345);
  std::vector<double> series;
  series.reserve(800);
  for (int i = 0; i < 400; ++i) {
    series.push_back(-std::log1p(-uniform_open(gen)));
  }
  for (int i = 0; i < 400; ++i) {
    series.push_back(3.0 * -std::log1p(-uniform_open(gen)));
  }
  const auto rows = estimate_qfcre_windowed(series, 100, 100, {0.2});
  double low_max = -1.0, high_min = 1e300;
  for (const auto& row : rows) {
    if (row.window_start < 400) {
      low_max = std::max(low_max, row.estimate);
    } else {
      high_min = std::min(high_min, row.estimate);
    }
  }
  r.check(high_min > low_max,
          "synthetic two-regime fallback: min volatile-window entropy " +
              fmt(high_min) + " > max quiet-window entropy " + fmt(low_max));
}

// ---------------------------------------------------------------- criterion 8

void criterion_oracle(Reporter& r) {
  struct Case {
    QuantileModel model;
    std::function<double(double)> survival;
    double upper;
  };
  const std::vector<Case> cases = {
      {make_uniform(1.0), [](double x) { return 1.0 - x; }, 1.0},
      {make_exponential(1.0), [](double x) { return std::exp(-x); }, 60.0},
      {make_weibull_family(1.0, 0.5),
       [](double x) { return std::exp(-x * x / 4.0); }, 2.0 * std::sqrt(60.0)},
      {make_pareto1(0.25),
       [](double x) { return x < 1.0 ? 1.0 : std::pow(x, -4.0); }, 1e5},
  };
  for (const auto& c : cases) {
    double worst = 0.0;
    for (double a : {0.25, 0.5, 0.75, 1.0}) {
      const double via_survival =
          fcre_distribution_oracle(c.survival, a, c.upper).value;
      const double via_quantile = qfcre::qfcre(c.model, a, forced()).value;
      worst = std::max(worst, std::abs(via_survival - via_quantile) /
                                  std::max(1.0, std::abs(via_quantile)));
    }
    r.check(worst <= 1e-6, c.model.name + ": worst deviation between the "
                           "survival-side and quantile-side integrals " +
                               fmt(worst));
  }
}

// ------------------------------------------------------------------- driver

struct Criterion {
  int index;
  const char* title;
  double budget_seconds;
  void (*run)(Reporter&);
};

const Criterion kCriteria[] = {
    {1, "closed-form agreement under quadrature", 5.0, criterion_closed_forms},
    {2, "power-Pareto reference study", 120.0, criterion_power_pareto_study},
    {3, "Govindarajulu reference study", 120.0, criterion_govindarajulu_study},
    {4, "entropy property suite and orderings", 30.0, criterion_property_suite},
    {5, "estimator invariants on randomized samples", 10.0,
     criterion_estimator_invariants},
    {6, "logistic-map entropy ordering", 5.0, criterion_chaos},
    {7, "financial pipeline with synthetic fallback", 10.0, criterion_finance},
    {8, "survival-side vs quantile-side oracle", 5.0, criterion_oracle},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected = std::atoi(argv[++i]);
    } else if (arg.rfind("--criterion=", 0) == 0) {
      selected = std::atoi(arg.c_str() + 12);
    } else {
      std::cerr << "usage: qfcre_acceptance [--criterion N]\n";
      return 2;
    }
  }

  bool all_ok = true;
  bool ran_any = false;
  for (const auto& c : kCriteria) {
    if (selected != 0 && c.index != selected) continue;
    ran_any = true;
    std::cout << "acceptance " << c.index << ": " << c.title << "\n";
    Reporter reporter;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(reporter);
    } catch (const std::exception& e) {
      reporter.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (seconds >= c.budget_seconds) {
      reporter.check(false, "runtime " + fmt(seconds) + " s exceeds the " +
                                fmt(c.budget_seconds) + " s budget");
    }
    const bool ok = reporter.ok;
    std::cout << "acceptance " << c.index << ": " << (ok ? "PASS" : "FAIL")
              << " [" << fmt(seconds) << " s, budget " << fmt(c.budget_seconds)
              << " s]\n";
    all_ok = all_ok && ok;
  }
  if (!ran_any) {
    std::cerr << "no such criterion: " << selected << "\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}
