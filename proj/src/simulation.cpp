// SPDX-License-Identifier: Apache-2.0

#include "qfcre/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qfcre/errors.hpp"
#include "qfcre/format.hpp"

namespace qfcre {
namespace {

double pairwise_sum_range(const double* x, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_range(x, half) + pairwise_sum_range(x + half, n - half);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t n,
                          std::uint64_t rep) {
  return splitmix64(splitmix64(splitmix64(master) ^ n) ^ rep);
}

double uniform_open(std::mt19937_64& gen) {
  const double u = (double(gen() >> 11) + 0.5) * 0x1.0p-53;
  return std::clamp(u, 1e-12, 1.0 - 1e-12);
}

double pairwise_sum(const std::vector<double>& x) {
  return pairwise_sum_range(x.data(), x.size());
}

void parallel_for_chunks(
    std::size_t count, int threads,
    const std::function<void(std::size_t, std::size_t)>& fn) {
  if (count == 0) return;
  std::size_t workers = threads > 0
                            ? std::size_t(threads)
                            : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, count);
  if (workers <= 1) {
    fn(0, count);
    return;
  }
  const std::size_t base = count / workers;
  const std::size_t rem = count % workers;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  std::size_t begin = 0;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t size = base + (w < rem ? 1 : 0);
    const std::size_t end = begin + size;
    pool.emplace_back([&fn, &errors, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

SampleData sample_model(const QuantileModel& m, std::size_t n,
                        std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<double> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(m.quantile(uniform_open(gen)));
  return SampleData(std::move(values));
}

void SimulationReport::write_csv(std::ostream& out) const {
  out << "# model: " << model << "\n";
  out << "# alpha: " << num17(alpha) << "\n";
  out << "# true_value: " << num17(true_value) << "\n";
  out << "# true_value_method: " << method_name(true_method) << "\n";
  out << "# replications: " << replications << "\n";
  out << "# seed: " << seed << "\n";
  out << "# convention: " << convention_name(convention) << "\n";
  out << "n,mean_estimate,bias,mse\n";
  for (const auto& row : rows) {
    out << row.n << "," << num17(row.mean_estimate) << "," << num17(row.bias)
        << "," << num17(row.mse) << "\n";
  }
}

SimulationReport bias_mse_study(const QuantileModel& m, FractionalOrder alpha,
                                const std::vector<std::size_t>& n_list,
                                std::size_t replications, std::uint64_t seed,
                                const StudyOptions& opts) {
  if (n_list.empty()) {
    throw ValidationError("bias_mse_study: need at least one sample size");
  }
  for (std::size_t n : n_list) {
    if (n < 2) {
      throw ValidationError("bias_mse_study: sample sizes must be >= 2, got " +
                            std::to_string(n));
    }
  }
  if (replications < 1) {
    throw ValidationError("bias_mse_study: need at least one replication");
  }

  QuadratureConfig forced = opts.quad;
  forced.force_quadrature = true;
  const EntropyValue truth = qfcre(m, alpha, forced);
  if (m.closed_form) {
    const double reference = m.closed_form(double(alpha));
    const double scale = std::max(1.0, std::abs(reference));
    if (std::abs(truth.value - reference) > 1e-5 * scale) {
      throw std::logic_error(
          "bias_mse_study: quadrature true value " + num17(truth.value) +
          " disagrees with the closed form " + num17(reference) +
          " for " + m.name);
    }
  }

  SimulationReport report;
  report.model = m.name;
  report.alpha = alpha;
  report.true_value = truth.value;
  report.true_method = truth.method;
  report.replications = replications;
  report.seed = seed;
  report.convention = opts.convention;

  std::vector<std::size_t> sizes = n_list;
  std::sort(sizes.begin(), sizes.end());

  for (std::size_t n : sizes) {
    std::vector<double> estimates(replications);
    parallel_for_chunks(
        replications, opts.threads, [&](std::size_t begin, std::size_t end) {
          for (std::size_t rep = begin; rep < end; ++rep) {
            const SampleData sample =
                sample_model(m, n, derive_seed(seed, n, rep));
            estimates[rep] =
                estimate_qfcre(sample, alpha, opts.convention).value;
          }
        });
    const double mean = pairwise_sum(estimates) / double(replications);
    std::vector<double> sq(replications);
    for (std::size_t rep = 0; rep < replications; ++rep) {
      const double d = estimates[rep] - truth.value;
      sq[rep] = d * d;
    }
    const double mse = pairwise_sum(sq) / double(replications);
    report.rows.push_back({n, mean, mean - truth.value, mse});
  }
  return report;
}

}  // namespace qfcre
