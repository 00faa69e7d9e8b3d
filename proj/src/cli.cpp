// SPDX-License-Identifier: Apache-2.0

#include "qfcre/cli.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfcre/catalog.hpp"
#include "qfcre/chaos.hpp"
#include "qfcre/entropy.hpp"
#include "qfcre/errors.hpp"
#include "qfcre/estimator.hpp"
#include "qfcre/finance.hpp"
#include "qfcre/format.hpp"
#include "qfcre/simulation.hpp"
#include "qfcre/verify.hpp"

namespace qfcre {
namespace {

std::vector<std::size_t> parse_size_list(const std::string& text,
                                         const std::string& what) {
  std::vector<std::size_t> out;
  for (const auto& token : split(text, ',')) {
    const auto t = trim(token);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
      throw ValidationError(what + ": could not parse '" + std::string(t) +
                            "' as a positive integer");
    }
    out.push_back(value);
  }
  if (out.empty()) {
    throw ValidationError(what + ": expected at least one value");
  }
  return out;
}

// Percentile grid: either a comma list ("0,0.25,0.5") or START:STOP:COUNT
// ("0:0.9:10" puts COUNT evenly spaced points on [START, STOP]).
std::vector<double> parse_u_grid(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) {
      throw ValidationError("u-grid '" + text +
                            "': expected START:STOP:COUNT");
    }
    const auto start = parse_double(trim(parts[0]));
    const auto stop = parse_double(trim(parts[1]));
    std::size_t count = 0;
    {
      const auto t = trim(parts[2]);
      const auto [ptr, ec] =
          std::from_chars(t.data(), t.data() + t.size(), count);
      if (ec != std::errc() || ptr != t.data() + t.size()) count = 0;
    }
    if (!start || !stop || count < 2) {
      throw ValidationError("u-grid '" + text +
                            "': expected START:STOP:COUNT with COUNT >= 2");
    }
    std::vector<double> grid;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      grid.push_back(*start +
                     (*stop - *start) * double(i) / double(count - 1));
    }
    return grid;
  }
  return parse_double_list(text, "u-grid");
}

// Everything is staged through a buffer so a failing subcommand emits
// nothing on the output stream (or into the --output file).
int deliver(const std::string& payload, const std::string& output_path,
            std::ostream& out, std::ostream& err) {
  if (output_path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream file(output_path, std::ios::trunc);
  if (!file) {
    err << "error: could not open output file '" << output_path << "'\n";
    return 1;
  }
  file << payload;
  file.flush();
  if (!file.good()) {
    err << "error: failed while writing output file '" << output_path
        << "'\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Fractional cumulative residual entropy in the quantile domain: "
      "closed forms, adaptive quadrature, spacing estimation, simulation, "
      "and time-series experiments"};
  app.name("qfcre");
  app.require_subcommand(1);

  std::string model_spec, alpha_text, u_grid_text, output_path;
  bool dynamic = false;

  auto* entropy_cmd = app.add_subcommand(
      "entropy", "Entropy of a model, static or residual-profile");
  entropy_cmd->add_option("--model", model_spec, "Model spec, e.g. "
                          "'exponential(lambda=1)'")->required();
  entropy_cmd->add_option("--alpha", alpha_text,
                          "Comma-separated fractional orders in [0,1]")
      ->required();
  auto* dyn_flag = entropy_cmd->add_flag(
      "--dynamic", dynamic, "Residual-entropy profile over --u-grid");
  auto* grid_opt = entropy_cmd->add_option(
      "--u-grid", u_grid_text, "Percentile grid: comma list or START:STOP:COUNT");
  dyn_flag->needs(grid_opt);
  grid_opt->needs(dyn_flag);
  entropy_cmd->add_option("--output", output_path, "Write CSV here instead of stdout");

  std::string input_path, convention_text = "gaps";
  std::size_t window = 0, step = 1;
  auto* estimate_cmd = app.add_subcommand(
      "estimate", "Spacing-estimator entropy of a sample file");
  estimate_cmd->add_option("--input", input_path, "Sample file, one value per line")
      ->required();
  estimate_cmd->add_option("--alpha", alpha_text, "Comma-separated fractional orders")
      ->required();
  auto* window_opt =
      estimate_cmd->add_option("--window", window, "Sliding-window length");
  estimate_cmd->add_option("--step", step, "Window step (default 1)")
      ->needs(window_opt);
  estimate_cmd->add_option("--convention", convention_text,
                           "Spacing convention: gaps | zero-baseline");
  estimate_cmd->add_option("--output", output_path, "Write CSV here instead of stdout");

  double sim_alpha = 0.0;
  std::string n_text;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string sim_convention_text = "zero-baseline";
  auto* simulate_cmd = app.add_subcommand(
      "simulate", "Monte-Carlo bias/MSE study of the spacing estimator");
  simulate_cmd->add_option("--model", model_spec, "Model spec")->required();
  simulate_cmd->add_option("--alpha", sim_alpha, "Fractional order in [0,1]")
      ->required();
  simulate_cmd->add_option("--n", n_text, "Comma-separated sample sizes")
      ->required();
  simulate_cmd->add_option("--reps", reps, "Replications per sample size")
      ->required();
  simulate_cmd->add_option("--seed", seed, "Master seed")->required();
  simulate_cmd->add_option("--threads", threads,
                           "Worker threads (0 = all cores)")
      ->envname("QFCRE_THREADS");
  simulate_cmd->add_option("--convention", sim_convention_text,
                           "Spacing convention (default zero-baseline)");
  simulate_cmd->add_option("--output", output_path, "Write CSV here instead of stdout");

  std::string a_text;
  double x0 = 0.1;
  std::size_t length = 2000, burn_in = 0;
  double chaos_alpha = 0.5;
  auto* chaos_cmd = app.add_subcommand(
      "chaos", "Entropy sweep over logistic-map trajectories");
  chaos_cmd->add_option("--a", a_text, "Comma-separated map parameters in [0,4]")
      ->required();
  chaos_cmd->add_option("--x0", x0, "Initial state (default 0.1)");
  chaos_cmd->add_option("--length", length, "Trajectory length (default 2000)");
  chaos_cmd->add_option("--alpha", chaos_alpha, "Fractional order")->required();
  chaos_cmd->add_option("--burn-in", burn_in, "Discarded leading iterations");
  chaos_cmd->add_option("--output", output_path, "Write CSV here instead of stdout");

  std::string partition_text;
  std::string date_column = "Date", close_column = "Close",
              date_format = "%Y-%m-%d";
  std::string delimiter = ",";
  auto* finance_cmd = app.add_subcommand(
      "finance", "Per-period entropy of log returns from a price CSV");
  finance_cmd->add_option("--input", input_path, "Price CSV with Date/Close columns")
      ->required();
  finance_cmd->add_option("--partition", partition_text,
                          "'yearly' or 'window:LENGTH,STEP'")
      ->required();
  finance_cmd->add_option("--alpha", alpha_text, "Comma-separated fractional orders")
      ->required();
  finance_cmd->add_option("--date-column", date_column, "Date column name");
  finance_cmd->add_option("--close-column", close_column, "Price column name");
  finance_cmd->add_option("--date-format", date_format,
                          "Date format from %Y %m %d and literals");
  finance_cmd->add_option("--delimiter", delimiter, "Field delimiter");
  finance_cmd->add_option("--output", output_path, "Write CSV here instead of stdout");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Run the invariant/property suite over the built-in catalog");
  verify_cmd->add_option("--output", output_path, "Write the report here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    std::ostringstream buffer;
    const QuadratureConfig cfg;

    if (entropy_cmd->parsed()) {
      const auto model = parse_model_spec(model_spec);
      const auto alphas = parse_double_list(alpha_text, "alpha");
      buffer << "# model: " << model.name << "\n";
      if (dynamic) {
        const auto grid = parse_u_grid(u_grid_text);
        buffer << "alpha,u,value,shape\n";
        for (double a : alphas) {
          const auto profile = qdfcre_profile(model, a, grid, cfg);
          for (std::size_t i = 0; i < grid.size(); ++i) {
            buffer << num17(a) << ',' << num17(profile.u[i]) << ','
                   << num17(profile.values[i].value) << ','
                   << profile_shape_name(profile.shape) << "\n";
          }
        }
      } else {
        buffer << "alpha,value,method,est_error\n";
        for (double a : alphas) {
          const auto v = qfcre(model, a, cfg);
          buffer << num17(a) << ',' << num17(v.value) << ','
                 << method_name(v.method) << ',' << num17(v.est_error) << "\n";
        }
      }
    } else if (estimate_cmd->parsed()) {
      const auto values = read_sample_file(input_path);
      const auto alphas = parse_double_list(alpha_text, "alpha");
      const auto convention = parse_convention(convention_text);
      buffer << "# input: " << input_path << "\n";
      buffer << "# convention: " << convention_name(convention) << "\n";
      if (*window_opt) {
        const auto rows =
            estimate_qfcre_windowed(values, window, step, alphas, convention);
        buffer << "window_start,alpha,estimate\n";
        for (const auto& r : rows) {
          buffer << r.window_start << ',' << num17(r.alpha) << ','
                 << num17(r.estimate) << "\n";
        }
      } else {
        const SampleData sample(values);
        buffer << "alpha,estimate,n\n";
        for (double a : alphas) {
          const auto est = estimate_qfcre(sample, a, convention);
          buffer << num17(a) << ',' << num17(est.value) << ',' << est.n
                 << "\n";
        }
      }
    } else if (simulate_cmd->parsed()) {
      const auto model = parse_model_spec(model_spec);
      const auto sizes = parse_size_list(n_text, "--n");
      StudyOptions opts;
      opts.convention = parse_convention(sim_convention_text);
      opts.threads = threads;
      const auto report =
          bias_mse_study(model, sim_alpha, sizes, reps, seed, opts);
      report.write_csv(buffer);
    } else if (chaos_cmd->parsed()) {
      const auto a_values = parse_double_list(a_text, "--a");
      const auto rows =
          chaos_entropy_sweep(a_values, x0, length, chaos_alpha, burn_in);
      buffer << "a,alpha,entropy\n";
      for (const auto& r : rows) {
        buffer << num17(r.a) << ',' << num17(r.alpha) << ','
               << num17(r.entropy) << "\n";
      }
    } else if (finance_cmd->parsed()) {
      if (delimiter.size() != 1) {
        throw ValidationError("--delimiter must be a single character");
      }
      CsvSpec csv;
      csv.date_column = date_column;
      csv.close_column = close_column;
      csv.date_format = date_format;
      csv.delimiter = delimiter[0];
      const auto partition = PartitionSpec::parse(partition_text);
      const auto alphas = parse_double_list(alpha_text, "alpha");
      const auto prices = load_prices_file(input_path, csv);
      const auto returns = to_return_series(prices);
      const auto table = period_entropy(returns, partition, alphas);
      for (const auto& w : table.warnings) err << "warning: " << w << "\n";
      buffer << "period,alpha,entropy\n";
      for (const auto& r : table.rows) {
        buffer << r.period << ',' << num17(r.alpha) << ',' << num17(r.entropy)
               << "\n";
      }
    } else if (verify_cmd->parsed()) {
      const auto results = run_verification(cfg);
      std::size_t passed = 0, findings = 0, failed = 0;
      for (const auto& r : results) {
        const char* tag = r.passed ? "PASS" : (r.finding ? "FINDING" : "FAIL");
        if (r.passed) {
          ++passed;
        } else if (r.finding) {
          ++findings;
        } else {
          ++failed;
        }
        buffer << tag << ' ' << r.name << ": " << r.detail << "\n";
      }
      buffer << results.size() << " checks: " << passed << " passed, "
             << findings << " findings, " << failed << " failed\n";
      if (failed > 0) {
        err << buffer.str();
        return 1;
      }
    }

    return deliver(buffer.str(), output_path, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << " (partial value " << num17(e.partial)
        << ", error estimate " << num17(e.est_error) << ")\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qfcre
