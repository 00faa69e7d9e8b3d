// SPDX-License-Identifier: Apache-2.0

#include "qfcre/finance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>

#include "qfcre/errors.hpp"
#include "qfcre/estimator.hpp"
#include "qfcre/format.hpp"

namespace qfcre {
namespace {

bool leap_year(int y) {
  return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int year, int month) {
  static constexpr int kDays[12] = {31, 28, 31, 30, 31, 30,
                                    31, 31, 30, 31, 30, 31};
  if (month == 2 && leap_year(year)) return 29;
  return kDays[month - 1];
}

// Matches `text` against a format of %Y (exactly 4 digits), %m, %d (1-2
// digits) and literal characters.
std::optional<Date> parse_date(std::string_view text,
                               std::string_view format) {
  Date date;
  bool saw_y = false, saw_m = false, saw_d = false;
  std::size_t pos = 0;

  auto read_digits = [&](std::size_t min_len, std::size_t max_len,
                         int& out) -> bool {
    std::size_t len = 0;
    int value = 0;
    while (len < max_len && pos + len < text.size() &&
           text[pos + len] >= '0' && text[pos + len] <= '9') {
      value = value * 10 + (text[pos + len] - '0');
      ++len;
    }
    if (len < min_len) return false;
    pos += len;
    out = value;
    return true;
  };

  for (std::size_t f = 0; f < format.size(); ++f) {
    if (format[f] == '%' && f + 1 < format.size()) {
      const char code = format[++f];
      bool ok = false;
      switch (code) {
        case 'Y':
          ok = read_digits(4, 4, date.year);
          saw_y = ok;
          break;
        case 'm':
          ok = read_digits(1, 2, date.month);
          saw_m = ok;
          break;
        case 'd':
          ok = read_digits(1, 2, date.day);
          saw_d = ok;
          break;
        default:
          return std::nullopt;  // unsupported directive
      }
      if (!ok) return std::nullopt;
    } else {
      if (pos >= text.size() || text[pos] != format[f]) return std::nullopt;
      ++pos;
    }
  }
  if (pos != text.size() || !saw_y || !saw_m || !saw_d) return std::nullopt;
  if (date.month < 1 || date.month > 12) return std::nullopt;
  if (date.day < 1 || date.day > days_in_month(date.year, date.month)) {
    return std::nullopt;
  }
  return date;
}

std::string strip_outer(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  return line;
}

[[noreturn]] void row_error(const std::string& origin, std::size_t row,
                            const std::string& message) {
  throw ValidationError(origin + " row " + std::to_string(row) + ": " +
                        message);
}

}  // namespace

std::string Date::iso() const {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
  return buf;
}

PriceSeries load_prices(std::istream& in, const CsvSpec& spec,
                        const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ValidationError(origin + ": missing header row");
  }
  line = strip_outer(std::move(line));

  std::size_t date_idx = std::size_t(-1);
  std::size_t close_idx = std::size_t(-1);
  {
    const auto cells = split(line, spec.delimiter);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto cell = trim(cells[i]);
      if (cell == spec.date_column) date_idx = i;
      if (cell == spec.close_column) close_idx = i;
    }
    if (date_idx == std::size_t(-1) || close_idx == std::size_t(-1)) {
      throw ValidationError(origin + ": header must contain columns '" +
                            spec.date_column + "' and '" + spec.close_column +
                            "', got '" + line + "'");
    }
  }

  struct Row {
    Date date;
    double price;
    std::size_t number;  // 1-based data row (header is row 0)
  };
  std::vector<Row> rows;
  std::size_t row_no = 0;
  while (std::getline(in, line)) {
    ++row_no;
    line = strip_outer(std::move(line));
    if (trim(line).empty()) continue;
    const auto cells = split(line, spec.delimiter);
    if (cells.size() <= std::max(date_idx, close_idx)) {
      row_error(origin, row_no,
                "expected at least " +
                    std::to_string(std::max(date_idx, close_idx) + 1) +
                    " columns, found " + std::to_string(cells.size()));
    }
    const auto date_text = trim(cells[date_idx]);
    const auto date = parse_date(date_text, spec.date_format);
    if (!date) {
      row_error(origin, row_no,
                "could not parse date '" + std::string(date_text) +
                    "' with format '" + spec.date_format + "'");
    }
    const auto price_text = trim(cells[close_idx]);
    const auto price = parse_double(price_text);
    if (!price) {
      row_error(origin, row_no,
                "could not parse price '" + std::string(price_text) + "'");
    }
    if (!std::isfinite(*price) || *price <= 0.0) {
      row_error(origin, row_no,
                "prices must be strictly positive, got " +
                    format_param(*price));
    }
    rows.push_back({*date, *price, row_no});
  }
  if (rows.size() < 2) {
    throw ValidationError(origin + ": need at least 2 price rows, found " +
                          std::to_string(rows.size()));
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.date < b.date; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].date == rows[i - 1].date) {
      throw ValidationError(origin + ": duplicate date " + rows[i].date.iso() +
                            " at rows " + std::to_string(rows[i - 1].number) +
                            " and " + std::to_string(rows[i].number));
    }
  }

  PriceSeries out;
  out.dates.reserve(rows.size());
  out.prices.reserve(rows.size());
  for (const auto& r : rows) {
    out.dates.push_back(r.date);
    out.prices.push_back(r.price);
  }
  return out;
}

PriceSeries load_prices_file(const std::string& path, const CsvSpec& spec) {
  std::ifstream file(path);
  if (!file) {
    throw ValidationError("could not open price file '" + path + "'");
  }
  return load_prices(file, spec, path);
}

ReturnSeries to_return_series(const PriceSeries& prices) {
  if (prices.prices.size() < 2) {
    throw ValidationError("to_return_series: need at least 2 prices");
  }
  ReturnSeries out;
  const std::size_t count = prices.prices.size() - 1;
  out.dates.reserve(count);
  out.log_returns.reserve(count);
  for (std::size_t t = 1; t < prices.prices.size(); ++t) {
    out.dates.push_back(prices.dates[t]);
    out.log_returns.push_back(std::log(prices.prices[t]) -
                              std::log(prices.prices[t - 1]));
  }
  out.shift = *std::min_element(out.log_returns.begin(),
                                out.log_returns.end());
  out.shifted.reserve(count);
  for (double r : out.log_returns) out.shifted.push_back(r - out.shift);
  return out;
}

PartitionSpec PartitionSpec::yearly() {
  PartitionSpec spec;
  spec.kind = Kind::yearly;
  return spec;
}

PartitionSpec PartitionSpec::window(std::size_t length, std::size_t step) {
  if (length < 2) {
    throw ValidationError("window partition: length must be >= 2, got " +
                          std::to_string(length));
  }
  if (step < 1) {
    throw ValidationError("window partition: step must be >= 1");
  }
  PartitionSpec spec;
  spec.kind = Kind::window;
  spec.window_length = length;
  spec.window_step = step;
  return spec;
}

PartitionSpec PartitionSpec::parse(const std::string& text) {
  if (text == "yearly") return yearly();
  const std::string prefix = "window:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string body = text.substr(prefix.size());
    const auto parts = split(body, ',');
    auto parse_size = [&](std::string_view token) -> std::size_t {
      const auto t = trim(token);
      std::size_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(t.data(), t.data() + t.size(), value);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ValidationError("partition spec '" + text +
                              "': could not parse '" + std::string(t) +
                              "' as a positive integer");
      }
      return value;
    };
    if (parts.size() != 2) {
      throw ValidationError("partition spec '" + text +
                            "': expected window:LENGTH,STEP");
    }
    return window(parse_size(parts[0]), parse_size(parts[1]));
  }
  throw ValidationError("partition spec '" + text +
                        "': expected 'yearly' or 'window:LENGTH,STEP'");
}

PeriodTable period_entropy(const ReturnSeries& series,
                           const PartitionSpec& partition,
                           const std::vector<double>& alphas) {
  if (alphas.empty()) {
    throw ValidationError("period_entropy: need at least one alpha");
  }
  if (series.shifted.size() != series.dates.size()) {
    throw ValidationError("period_entropy: malformed return series");
  }
  PeriodTable table;

  auto emit = [&](const std::string& period, std::size_t begin,
                  std::size_t end) {
    const std::size_t count = end - begin;
    if (count < 2) {
      table.warnings.push_back("period " + period + " skipped: only " +
                               std::to_string(count) +
                               " return(s), need at least 2");
      return;
    }
    const SampleData sample(std::vector<double>(
        series.shifted.begin() + std::ptrdiff_t(begin),
        series.shifted.begin() + std::ptrdiff_t(end)));
    for (double a : alphas) {
      const auto est = estimate_qfcre(sample, FractionalOrder(a));
      table.rows.push_back({period, a, est.value, count});
    }
  };

  if (partition.kind == PartitionSpec::Kind::yearly) {
    std::size_t begin = 0;
    while (begin < series.dates.size()) {
      const int year = series.dates[begin].year;
      std::size_t end = begin;
      while (end < series.dates.size() && series.dates[end].year == year) {
        ++end;
      }
      emit(std::to_string(year), begin, end);
      begin = end;
    }
  } else {
    const std::size_t length = partition.window_length;
    const std::size_t step = std::max<std::size_t>(1, partition.window_step);
    if (series.shifted.size() < length) {
      table.warnings.push_back(
          "no window of length " + std::to_string(length) +
          " fits a series of " + std::to_string(series.shifted.size()) +
          " returns");
      return table;
    }
    for (std::size_t start = 0; start + length <= series.shifted.size();
         start += step) {
      emit(std::to_string(start), start, start + length);
    }
  }
  return table;
}

}  // namespace qfcre
