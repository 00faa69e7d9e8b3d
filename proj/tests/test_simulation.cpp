// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "qfcre/catalog.hpp"
#include "qfcre/errors.hpp"
#include "qfcre/format.hpp"
#include "qfcre/simulation.hpp"

using namespace qfcre;

TEST_CASE("splitmix64 matches the published output stream") {
  CHECK(splitmix64(0) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64(0x9E3779B97F4A7C15ULL) == 0x6E789E6AA1B965F4ULL);
  CHECK(splitmix64(1) == 0x910A2DEC89025CC1ULL);
}

TEST_CASE("derived seeds separate replications and sample sizes") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t master : {7ULL, 42ULL}) {
    for (std::uint64_t n : {50ULL, 100ULL, 250ULL, 500ULL, 1000ULL}) {
      for (std::uint64_t rep = 0; rep < 64; ++rep) {
        seen.insert(derive_seed(master, n, rep));
      }
    }
  }
  CHECK(seen.size() == 2 * 5 * 64);
  CHECK(derive_seed(7, 50, 0) == derive_seed(7, 50, 0));
}

TEST_CASE("uniform draws stay strictly inside the unit interval") {
  std::mt19937_64 gen(2024);
  double lo = 1.0, hi = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double u = uniform_open(gen);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo > 0.0);
  CHECK(hi < 1.0);

  std::mt19937_64 g1(5), g2(5);
  for (int i = 0; i < 100; ++i) {
    CHECK(uniform_open(g1) == uniform_open(g2));
  }
}

TEST_CASE("pairwise summation") {
  CHECK(pairwise_sum({}) == 0.0);
  CHECK(pairwise_sum({3.25}) == 3.25);
  CHECK(pairwise_sum({1.0, 2.0, 3.0}) == 6.0);
  std::vector<double> ints(1000);
  std::iota(ints.begin(), ints.end(), 1.0);
  CHECK(pairwise_sum(ints) == 500500.0);  // integer sums are exact
  std::vector<double> tenth(4096, 0.1);
  CHECK(std::abs(pairwise_sum(tenth) - 409.6) < 1e-10);
}

TEST_CASE("parallel chunks cover the range exactly once and rethrow") {
  for (int threads : {0, 1, 3, 8}) {
    std::vector<int> hits(100, 0);
    std::mutex mu;
    parallel_for_chunks(100, threads, [&](std::size_t b, std::size_t e) {
      std::lock_guard<std::mutex> lock(mu);
      for (std::size_t i = b; i < e; ++i) hits[i]++;
    });
    CHECK(std::all_of(hits.begin(), hits.end(),
                      [](int h) { return h == 1; }));
  }
  parallel_for_chunks(0, 4, [](std::size_t, std::size_t) {
    throw std::runtime_error("never runs");
  });
  CHECK_THROWS_AS(
      parallel_for_chunks(10, 4,
                          [](std::size_t b, std::size_t e) {
                            for (std::size_t i = b; i < e; ++i) {
                              if (i == 5) throw std::runtime_error("boom");
                            }
                          }),
      std::runtime_error);
}

TEST_CASE("inverse-transform sampling is deterministic in the seed") {
  const auto m = make_exponential(1.0);
  const auto a = sample_model(m, 200, 99);
  const auto b = sample_model(m, 200, 99);
  const auto c = sample_model(m, 200, 100);
  CHECK(a.sorted() == b.sorted());
  CHECK(a.sorted() != c.sorted());
  CHECK(a.size() == 200);
  CHECK(a.sorted().front() >= 0.0);
}

TEST_CASE("bias/MSE study: report shape and internal consistency") {
  const auto m = make_uniform(1.0);
  const auto report = bias_mse_study(m, 0.5, {20, 10}, 200, 42);
  CHECK(report.model == "uniform(b=1)");
  CHECK(report.alpha == 0.5);
  CHECK(report.replications == 200);
  CHECK(report.seed == 42);
  CHECK(report.convention == SpacingConvention::zero_baseline);
  CHECK(report.true_method == Method::quadrature);
  const double truth = std::tgamma(1.5) / std::pow(2.0, 1.5);
  CHECK(std::abs(report.true_value - truth) < 1e-8);

  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].n == 10);  // sorted ascending regardless of input order
  CHECK(report.rows[1].n == 20);
  for (const auto& row : report.rows) {
    CHECK(std::abs(row.mean_estimate - truth) < 0.1);
    CHECK(row.bias == row.mean_estimate - report.true_value);
    CHECK(row.mse >= row.bias * row.bias - 1e-15);
    CHECK(row.mse > 0.0);
  }

  CHECK_THROWS_AS(bias_mse_study(m, 0.5, {}, 10, 1), ValidationError);
  CHECK_THROWS_AS(bias_mse_study(m, 0.5, {1}, 10, 1), ValidationError);
  CHECK_THROWS_AS(bias_mse_study(m, 0.5, {10}, 0, 1), ValidationError);
}

TEST_CASE("bias/MSE study is bitwise thread invariant") {
  const auto m = make_exponential(1.0);
  StudyOptions serial;
  serial.threads = 1;
  StudyOptions wide;
  wide.threads = 4;
  const auto a = bias_mse_study(m, 0.5, {16, 32}, 64, 9001, serial);
  const auto b = bias_mse_study(m, 0.5, {16, 32}, 64, 9001, wide);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].mean_estimate == b.rows[i].mean_estimate);
    CHECK(a.rows[i].bias == b.rows[i].bias);
    CHECK(a.rows[i].mse == b.rows[i].mse);
  }
}

TEST_CASE("bias directions match the reference tabulations") {
  // Power-Pareto at alpha=0.25 underestimates at n=50 (bias near -0.11).
  const auto pp = bias_mse_study(make_power_pareto(1.5, 2.0, 0.25), 0.25, {50},
                                 300, 7);
  CHECK(pp.rows[0].bias > -0.17);
  CHECK(pp.rows[0].bias < -0.05);

  // Govindarajulu at alpha=0.75 overestimates at n=100.
  const auto gv = bias_mse_study(make_govindarajulu(1.0, 2.0, 2.0), 0.75,
                                 {100}, 300, 7);
  CHECK(gv.rows[0].bias > 0.0);
  CHECK(gv.rows[0].bias < 0.05);
}

TEST_CASE("a closed form that contradicts quadrature is a logic error") {
  auto broken = make_exponential(1.0);
  broken.closed_form = [](double) { return 42.0; };
  CHECK_THROWS_AS(bias_mse_study(broken, 0.5, {10}, 5, 1), std::logic_error);
}

TEST_CASE("simulation CSV round-trips") {
  const auto report = bias_mse_study(make_uniform(1.0), 0.5, {10, 20}, 50, 3);
  std::ostringstream out;
  report.write_csv(out);
  const std::string text = out.str();
  CHECK(text.find("# model: uniform(b=1)") != std::string::npos);
  CHECK(text.find("# convention: zero-baseline") != std::string::npos);
  CHECK(text.find("# seed: 3") != std::string::npos);
  CHECK(text.find("n,mean_estimate,bias,mse") != std::string::npos);

  // Data rows re-parse to the in-memory report exactly (17 digits).
  std::istringstream in(text);
  std::string line;
  std::size_t row_idx = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
    const auto fields = split(line, ',');
    REQUIRE(fields.size() == 4);
    REQUIRE(row_idx < report.rows.size());
    CHECK(*parse_double(fields[1]) == report.rows[row_idx].mean_estimate);
    CHECK(*parse_double(fields[2]) == report.rows[row_idx].bias);
    CHECK(*parse_double(fields[3]) == report.rows[row_idx].mse);
    ++row_idx;
  }
  CHECK(row_idx == report.rows.size());
}
