// SPDX-License-Identifier: Apache-2.0
// Dated price ingestion, log returns, and per-period entropy tables.

#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "qfcre/model.hpp"

namespace qfcre {

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;

  friend auto operator<=>(const Date&, const Date&) = default;
  std::string iso() const;  // YYYY-MM-DD
};

struct CsvSpec {
  std::string date_column = "Date";
  std::string close_column = "Close";
  char delimiter = ',';
  // Composed of %Y (4-digit year), %m, %d (1-2 digits) and literal
  // characters, e.g. "%Y-%m-%d" or "%m/%d/%Y".
  std::string date_format = "%Y-%m-%d";
};

struct PriceSeries {
  std::vector<Date> dates;     // sorted ascending, no duplicates
  std::vector<double> prices;  // strictly positive, aligned with dates
};

// Reads a delimited file with a header row. Rows are re-sorted by date;
// diagnostics reference 1-based data-row numbers of the input (the header
// is row 0). Rejected: missing columns, unparseable dates or prices,
// non-positive prices, duplicate dates, fewer than two rows.
PriceSeries load_prices(std::istream& in, const CsvSpec& spec = {},
                        const std::string& origin = "<input>");
PriceSeries load_prices_file(const std::string& path,
                             const CsvSpec& spec = {});

struct ReturnSeries {
  // Date of the later price of each return; a return belongs to the
  // calendar period of this date.
  std::vector<Date> dates;
  std::vector<double> log_returns;  // r_t = log P_t - log P_{t-1}
  // log_returns - min(log_returns): nonnegative, minimum exactly 0. The
  // estimator is a function of spacings, so this global shift does not
  // change any entropy value.
  std::vector<double> shifted;
  double shift = 0.0;  // the subtracted minimum
};

ReturnSeries to_return_series(const PriceSeries& prices);

struct PartitionSpec {
  enum class Kind { yearly, window };
  Kind kind = Kind::yearly;
  std::size_t window_length = 0;
  std::size_t window_step = 0;

  static PartitionSpec yearly();
  static PartitionSpec window(std::size_t length, std::size_t step);
  // "yearly" or "window:LENGTH,STEP".
  static PartitionSpec parse(const std::string& text);
};

struct PeriodRow {
  std::string period;  // calendar year ("2018") or window start index
  double alpha = 0.0;
  double entropy = 0.0;
  std::size_t observations = 0;  // returns in the period
};

struct PeriodTable {
  std::vector<PeriodRow> rows;
  std::vector<std::string> warnings;  // skipped periods (< 2 returns)
};

// Entropy of the shifted returns per period per alpha, using the gaps
// spacing convention. Yearly periods follow the calendar year of each
// return's later date; window periods slide over return indices.
PeriodTable period_entropy(const ReturnSeries& series,
                           const PartitionSpec& partition,
                           const std::vector<double>& alphas);

}  // namespace qfcre
