// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <vector>

#include <doctest.h>

#include "qfcre/catalog.hpp"
#include "qfcre/entropy.hpp"
#include "qfcre/errors.hpp"
#include "qfcre/transforms.hpp"

using namespace qfcre;

namespace {

bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

QuadratureConfig forced() {
  QuadratureConfig cfg;
  cfg.force_quadrature = true;
  return cfg;
}

// Independent series evaluation for power_pareto with l1 = 2 and l2 < 1,
// obtained by expanding the density on the t = -log(1-p) domain:
//   C Gamma(a+1) [ l2/(1-l2)^{a+1} + (2-2 l2)/(2-l2)^{a+1}
//                  - (2-l2)/(3-l2)^{a+1} ].
double power_pareto_series(double C, double l2, double a) {
  return C * std::tgamma(a + 1.0) *
         (l2 / std::pow(1.0 - l2, a + 1.0) +
          (2.0 - 2.0 * l2) / std::pow(2.0 - l2, a + 1.0) -
          (2.0 - l2) / std::pow(3.0 - l2, a + 1.0));
}

// Independent series evaluation for govindarajulu with integer beta, from
// the binomial expansion of (1 - e^{-t})^{beta-1}:
//   sigma beta (beta+1) Gamma(a+1) sum_j (-1)^j C(beta-1, j) / (3+j)^{a+1}.
double govindarajulu_series(double sigma, int beta, double a) {
  double sum = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= beta - 1; ++j) {
    sum += (j % 2 == 0 ? 1.0 : -1.0) * binom / std::pow(3.0 + j, a + 1.0);
    binom = binom * (beta - 1 - j) / (j + 1);
  }
  return sigma * beta * (beta + 1.0) * std::tgamma(a + 1.0) * sum;
}

}  // namespace

TEST_CASE("closed forms are used and correct") {
  const auto u = qfcre::qfcre(make_uniform(1.0), 0.0);
  CHECK(u.method == Method::closed_form);
  CHECK(u.est_error == 0.0);
  CHECK(u.alpha == 0.0);
  CHECK(close(u.value, 0.5, 1e-15));

  const auto e = qfcre::qfcre(make_exponential(1.0), 1.0);
  CHECK(e.method == Method::closed_form);
  CHECK(close(e.value, 1.0, 1e-15));

  // Families without a closed form integrate.
  const auto p = qfcre::qfcre(make_power(1.0, 2.0), 0.5);
  CHECK(p.method == Method::quadrature);
  CHECK(p.est_error > 0.0);
}

TEST_CASE("quadrature agrees with every catalog closed form") {
  const std::vector<QuantileModel> models = {
      make_uniform(1.0),
      make_uniform(2.5),
      make_exponential(1.0),
      make_exponential(2.0),
      make_pareto1(0.25),
      make_pareto1(0.5),
      make_rescaled_beta(2.0, 2.0),
      make_lambda_family(2.0, 0.5, 0.0),
      make_lambda_family(2.0, 1.0, 0.0),
      make_weibull_family(0.5, 0.0),
      make_weibull_family(1.0, 0.5),
      make_weibull_family(1.5, -0.5),
      make_linear_mrq(2.0, 3.0),
  };
  for (const auto& m : models) {
    REQUIRE(static_cast<bool>(m.closed_form));
    for (double alpha : {0.1, 0.5, 0.9, 1.0}) {
      const auto numeric = qfcre::qfcre(m, alpha, forced());
      CHECK(numeric.method == Method::quadrature);
      CHECK_MESSAGE(close(numeric.value, m.closed_form(alpha), 1e-8),
                    m.name, " alpha=", alpha, " numeric=", numeric.value,
                    " closed=", m.closed_form(alpha));
    }
  }
}

TEST_CASE("power-Pareto entropy matches its series expansion") {
  const auto m = make_power_pareto(1.5, 2.0, 0.25);
  for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
    CHECK(close(qfcre::qfcre(m, alpha).value, power_pareto_series(1.5, 0.25, alpha),
                1e-8));
  }
  CHECK(close(qfcre::qfcre(m, 0.25).value, 0.828352882415, 1e-9));
  CHECK(close(qfcre::qfcre(m, 0.5).value, 0.862871608712, 1e-9));
  CHECK(close(qfcre::qfcre(m, 1.0).value, 1.0542531062011581, 1e-12));
}

TEST_CASE("Govindarajulu entropy matches its series expansion") {
  const auto m = make_govindarajulu(1.0, 2.0, 2.0);
  for (double alpha : {0.5, 0.75, 0.85, 1.0}) {
    CHECK(close(qfcre::qfcre(m, alpha).value, govindarajulu_series(2.0, 2, alpha),
                1e-8));
  }
  CHECK(close(qfcre::qfcre(m, 0.75).value, 0.637926059548, 1e-9));
  CHECK(close(qfcre::qfcre(m, 0.85).value, 0.613548985414, 1e-9));
  CHECK(close(qfcre::qfcre(m, 1.0).value, 7.0 / 12.0, 1e-10));

  // The location parameter never enters the entropy.
  CHECK(close(qfcre::qfcre(make_govindarajulu(-3.0, 2.0, 2.0), 0.75).value,
              qfcre::qfcre(m, 0.75).value, 1e-12));

  // An independent integer order as a second data point.
  const auto m3 = make_govindarajulu(0.0, 1.0, 3.0);
  for (double alpha : {0.4, 1.0}) {
    CHECK(close(qfcre::qfcre(m3, alpha).value, govindarajulu_series(1.0, 3, alpha),
                1e-8));
  }
}

TEST_CASE("qcre is the alpha=1 specialization") {
  for (const auto& m : {make_exponential(2.0), make_power_pareto(1.5, 2.0, 0.25)}) {
    const auto a = qcre(m);
    const auto b = qfcre::qfcre(m, 1.0);
    CHECK(a.value == b.value);
    CHECK(a.method == b.method);
    CHECK(a.alpha == 1.0);
  }
}

TEST_CASE("quantile Shannon entropy and the lower-bound constant") {
  CHECK(close(quantile_shannon_entropy(make_uniform(1.0)), 0.0, 1e-10));
  CHECK(close(quantile_shannon_entropy(make_uniform(std::exp(1.0))), 1.0,
              1e-10));
  CHECK(close(quantile_shannon_entropy(make_exponential(1.0)), 1.0, 1e-8));
  CHECK(close(quantile_shannon_entropy(make_pareto1(0.5)),
              1.5 - std::log(2.0), 1e-8));

  CHECK(close(shannon_bound_constant(0.0), std::exp(-1.0), 1e-15));
  CHECK(close(shannon_bound_constant(0.5), 0.27565427302, 1e-10));
  CHECK(close(shannon_bound_constant(1.0),
              std::exp(-1.0 - 0.57721566490153286), 1e-14));
}

TEST_CASE("escort factorization matches the direct escort entropy") {
  const auto base = make_exponential(1.0);
  const auto f = escort_factorization(base, 1.5, 0.5);
  // Normalizer integral_0^1 (1-p)^{1/2} dp = 2/3.
  CHECK(close(f.normalizer, 2.0 / 3.0, 1e-9));
  CHECK(close(f.product, f.normalizer * f.weighted_entropy, 1e-15));
  // Hand value: (2/3) Gamma(3/2) / (1/2)^{3/2} = (2/3) sqrt(2 pi).
  CHECK(close(f.product, (2.0 / 3.0) * std::sqrt(2.0 * std::acos(-1.0)), 1e-8));
  const auto esc = escort_transform(base, 1.5);
  CHECK(close(qfcre::qfcre(esc, 0.5).value, f.product, 1e-6));

  // Flat densities are fixed points: the factorization reproduces the plain
  // entropy for every order.
  for (double c : {0.5, 2.0}) {
    const auto g = escort_factorization(make_uniform(2.0), c, 0.5);
    CHECK(close(g.product, qfcre::qfcre(make_uniform(2.0), 0.5).value, 1e-8));
  }

  // Order 2 on the exponential diverges on both routes, consistently.
  CHECK_THROWS_AS(escort_factorization(base, 2.0, 0.5), DivergenceError);
  CHECK_THROWS_AS(qfcre::qfcre(escort_transform(base, 2.0), 0.5), DivergenceError);

  CHECK_THROWS_AS(escort_factorization(base, 0.0, 0.5), ValidationError);
}

TEST_CASE("distribution-side oracle") {
  // Exponential rate 2: integral S (-log S) dx = 1/2 at alpha = 1.
  const auto e = fcre_distribution_oracle(
      [](double x) { return std::exp(-2.0 * x); }, 1.0, 15.0);
  CHECK(e.method == Method::oracle);
  CHECK(close(e.value, 0.5, 1e-9));

  // Uniform on [0,1]: S hits zero at the endpoint, no tail at all.
  const auto u = fcre_distribution_oracle(
      [](double x) { return 1.0 - x; }, 0.5, 1.0);
  CHECK(close(u.value, std::tgamma(1.5) / std::pow(2.0, 1.5), 1e-9));

  // alpha = 0 reduces the integrand to S, i.e. the mean.
  const auto mean = fcre_distribution_oracle(
      [](double x) { return std::exp(-x); }, 0.0, 40.0);
  CHECK(close(mean.value, 1.0, 1e-9));

  // A truncation that leaves a visible tail is rejected up front.
  CHECK_THROWS_AS(fcre_distribution_oracle(
                      [](double x) { return std::exp(-x); }, 0.5, 2.0),
                  ValidationError);
  CHECK_THROWS_AS(fcre_distribution_oracle(
                      [](double x) { return std::exp(-x); }, 0.5, 0.0),
                  ValidationError);
}

TEST_CASE("non-integrable tails raise DivergenceError") {
  try {
    qfcre::qfcre(make_weibull_family(2.5, 0.0), 0.5);
    FAIL("expected DivergenceError");
  } catch (const DivergenceError& e) {
    CHECK(std::isfinite(e.partial));
    CHECK(e.partial > 0.0);
  }
}

TEST_CASE("residual entropy: closed-form spot values") {
  // Memoryless: the exponential residual profile is flat at Gamma(alpha+1).
  for (double u : {0.0, 0.3, 0.7}) {
    CHECK(close(qdfcre(make_exponential(1.0), 0.5, u).value, std::tgamma(1.5),
                1e-9));
  }

  // Rescaled beta: c r^alpha (1-u)^{1/r} Gamma(alpha+1) / (r+1)^{alpha+1}.
  const auto rb = make_rescaled_beta(2.0, 2.0);
  auto rb_ref = [](double alpha, double u) {
    return 2.0 * std::pow(2.0, alpha) * std::pow(1.0 - u, 0.5) *
           std::tgamma(alpha + 1.0) / std::pow(3.0, alpha + 1.0);
  };
  CHECK(close(qdfcre(rb, 1.0, 0.0).value, 4.0 / 9.0, 1e-9));
  CHECK(close(qdfcre(rb, 0.6, 0.4).value, 0.3617692322, 1e-9));
  for (double u : {0.0, 0.25, 0.8}) {
    CHECK(close(qdfcre(rb, 0.6, u).value, rb_ref(0.6, u), 1e-9));
  }

  // Linear mean-residual family: Gamma(alpha+1) ((a+b) - (1-u) 2^{1-alpha}).
  const auto lin = make_linear_mrq(2.0, 3.0);
  CHECK(close(qdfcre(lin, 1.0, 0.0).value, 4.0, 1e-9));
  CHECK(close(qdfcre(lin, 0.5, 0.3).value,
              std::tgamma(1.5) * (5.0 - 0.7 * std::pow(2.0, 0.5)), 1e-9));

  CHECK_THROWS_AS(qdfcre(lin, 0.5, 1.0), ValidationError);
  CHECK_THROWS_AS(qdfcre(lin, 0.5, -0.1), ValidationError);
  CHECK_THROWS_AS(qdfcre(lin, 0.5, 1.5), ValidationError);
}

TEST_CASE("residual entropy is continuous at u = 0") {
  for (const auto& m : {make_rescaled_beta(2.0, 2.0), make_exponential(2.0),
                        make_govindarajulu(1.0, 2.0, 2.0)}) {
    const double at0 = qdfcre(m, 0.5, 0.0).value;
    const double near0 = qdfcre(m, 0.5, 1e-9).value;
    CHECK(close(near0, at0, 1e-6));
  }
}

TEST_CASE("residual profiles classify monotonicity") {
  std::vector<double> grid;
  for (int i = 1; i <= 9; ++i) grid.push_back(i / 10.0);

  const auto flat = qdfcre_profile(make_exponential(1.0), 0.5, grid);
  CHECK(flat.shape == ProfileShape::constant);
  CHECK(flat.u == grid);
  CHECK(flat.values.size() == grid.size());

  const auto down = qdfcre_profile(make_uniform(2.0), 0.5, grid);
  CHECK(down.shape == ProfileShape::decreasing);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double expected =
        (1.0 - grid[i]) * std::tgamma(1.5) / std::pow(2.0, 0.5);
    CHECK(close(down.values[i].value, expected, 1e-9));
  }

  const auto rb = qdfcre_profile(make_rescaled_beta(2.0, 2.0), 0.6, grid);
  CHECK(rb.shape == ProfileShape::decreasing);

  const auto up = qdfcre_profile(make_pareto1(0.5), 0.5, grid);
  CHECK(up.shape == ProfileShape::increasing);

  CHECK_THROWS_AS(qdfcre_profile(make_uniform(1.0), 0.5, {}), ValidationError);
  CHECK_THROWS_AS(qdfcre_profile(make_uniform(1.0), 0.5, {0.5, 1.0}),
                  ValidationError);
  CHECK_THROWS_AS(qdfcre_profile(make_uniform(1.0), 0.5, {0.5, 0.5}),
                  ValidationError);
  CHECK_THROWS_AS(qdfcre_profile(make_uniform(1.0), 0.5, {0.7, 0.2}),
                  ValidationError);
}
