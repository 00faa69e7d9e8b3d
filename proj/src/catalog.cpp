// SPDX-License-Identifier: Apache-2.0

#include "qfcre/catalog.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <utility>

#include "qfcre/errors.hpp"
#include "qfcre/format.hpp"
#include "qfcre/quadrature.hpp"

namespace qfcre {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

std::string named(const std::string& family,
                  std::initializer_list<std::pair<const char*, double>> params) {
  std::string out = family + "(";
  bool first = true;
  for (const auto& [key, value] : params) {
    if (!first) out += ",";
    out += std::string(key) + "=" + format_param(value);
    first = false;
  }
  return out + ")";
}

}  // namespace

QuantileModel make_uniform(double b) {
  require(b > 0.0, "uniform: b > 0 required, got b=" + format_param(b));
  QuantileModel m;
  m.name = named("uniform", {{"b", b}});
  m.quantile = [b](double u) { return b * u; };
  m.density = [b](double) { return b; };
  m.density_from_survivor = [b](double) { return b; };
  m.support_floor = 0.0;
  m.closed_form = [b](double a) {
    return b * std::tgamma(a + 1.0) / std::pow(2.0, a + 1.0);
  };
  return m;
}

QuantileModel make_exponential(double lambda) {
  require(lambda > 0.0,
          "exponential: lambda > 0 required, got lambda=" + format_param(lambda));
  QuantileModel m;
  m.name = named("exponential", {{"lambda", lambda}});
  m.quantile = [lambda](double u) { return -std::log1p(-u) / lambda; };
  m.density = [lambda](double u) { return 1.0 / (lambda * (1.0 - u)); };
  m.density_from_survivor = [lambda](double s) { return 1.0 / (lambda * s); };
  m.support_floor = 0.0;
  m.closed_form = [lambda](double a) { return std::tgamma(a + 1.0) / lambda; };
  return m;
}

QuantileModel make_power(double beta, double delta) {
  require(beta > 0.0, "power: beta > 0 required, got beta=" + format_param(beta));
  require(delta > 0.0,
          "power: delta > 0 required, got delta=" + format_param(delta));
  QuantileModel m;
  m.name = named("power", {{"beta", beta}, {"delta", delta}});
  m.quantile = [beta, delta](double u) { return beta * std::pow(u, delta); };
  m.density = [beta, delta](double u) {
    return beta * delta * std::pow(u, delta - 1.0);
  };
  m.density_from_survivor = [beta, delta](double s) {
    return beta * delta * std::pow(1.0 - s, delta - 1.0);
  };
  m.support_floor = 0.0;
  return m;
}

QuantileModel make_pareto1(double beta) {
  require(beta > 0.0,
          "pareto1: beta > 0 required, got beta=" + format_param(beta));
  QuantileModel m;
  m.name = named("pareto1", {{"beta", beta}});
  m.quantile = [beta](double u) { return std::pow(1.0 - u, -beta); };
  m.density = [beta](double u) { return beta * std::pow(1.0 - u, -beta - 1.0); };
  m.density_from_survivor = [beta](double s) {
    return beta * std::pow(s, -beta - 1.0);
  };
  m.support_floor = 1.0;
  if (beta < 1.0) {
    m.closed_form = [beta](double a) {
      return beta * std::tgamma(a + 1.0) / std::pow(1.0 - beta, a + 1.0);
    };
  }
  return m;
}

QuantileModel make_rescaled_beta(double c, double r) {
  require(c > 0.0, "rescaled_beta: c > 0 required, got c=" + format_param(c));
  require(r > 0.0, "rescaled_beta: r > 0 required, got r=" + format_param(r));
  QuantileModel m;
  m.name = named("rescaled_beta", {{"c", c}, {"r", r}});
  m.quantile = [c, r](double u) {
    return c * (1.0 - std::pow(1.0 - u, 1.0 / r));
  };
  m.density = [c, r](double u) {
    return (c / r) * std::pow(1.0 - u, 1.0 / r - 1.0);
  };
  m.density_from_survivor = [c, r](double s) {
    return (c / r) * std::pow(s, 1.0 / r - 1.0);
  };
  m.support_floor = 0.0;
  m.closed_form = [c, r](double a) {
    return c * std::pow(r, a) * std::tgamma(a + 1.0) / std::pow(r + 1.0, a + 1.0);
  };
  return m;
}

QuantileModel make_lambda_family(double C, double A, double beta) {
  require(C > 0.0, "lambda_family: C > 0 required, got C=" + format_param(C));
  require(beta > -1.0,
          "lambda_family: beta > -1 required for an integrable density, got "
          "beta=" +
              format_param(beta));
  QuantileModel m;
  m.name = named("lambda_family", {{"C", C}, {"A", A}, {"beta", beta}});
  m.density = [C, A, beta](double u) {
    return C * std::pow(u, beta) * std::pow(1.0 - u, -(A + beta));
  };
  m.density_from_survivor = [C, A, beta](double s) {
    return C * std::pow(1.0 - s, beta) * std::pow(s, -(A + beta));
  };
  m.support_floor = 0.0;
  if (beta == 0.0) {
    if (A == 1.0) {
      m.quantile = [C](double u) { return -C * std::log1p(-u); };
    } else {
      m.quantile = [C, A](double u) {
        return C * (std::pow(1.0 - u, 1.0 - A) - 1.0) / (A - 1.0);
      };
    }
    if (A < 2.0) {
      m.closed_form = [C, A](double a) {
        return C * std::tgamma(a + 1.0) / std::pow(2.0 - A, a + 1.0);
      };
    }
  } else {
    m.quantile = cumulative_quantile(m.density, 0.0);
  }
  return m;
}

QuantileModel make_weibull_family(double A, double B) {
  require(A > 0.0, "weibull_family: A > 0 required, got A=" + format_param(A));
  require(B < 1.0, "weibull_family: B < 1 required, got B=" + format_param(B));
  QuantileModel m;
  m.name = named("weibull_family", {{"A", A}, {"B", B}});
  m.density = [A, B](double u) {
    return std::pow(1.0 - u, -A) * std::pow(-std::log1p(-u), -B);
  };
  m.density_from_survivor = [A, B](double s) {
    return std::pow(s, -A) * std::pow(-std::log(s), -B);
  };
  m.support_floor = 0.0;
  if (A == 1.0) {
    m.quantile = [B](double u) {
      return std::pow(-std::log1p(-u), 1.0 - B) / (1.0 - B);
    };
  } else {
    m.quantile = cumulative_quantile(m.density, 0.0);
  }
  if (A < 2.0) {
    m.closed_form = [A, B](double a) {
      return std::tgamma(a - B + 1.0) / std::pow(2.0 - A, a - B + 1.0);
    };
  }
  return m;
}

QuantileModel make_power_pareto(double C, double l1, double l2) {
  require(C > 0.0, "power_pareto: C > 0 required, got C=" + format_param(C));
  require(l1 > 0.0, "power_pareto: l1 > 0 required, got l1=" + format_param(l1));
  require(l2 > 0.0, "power_pareto: l2 > 0 required, got l2=" + format_param(l2));
  QuantileModel m;
  m.name = named("power_pareto", {{"C", C}, {"l1", l1}, {"l2", l2}});
  m.quantile = [C, l1, l2](double u) {
    return C * std::pow(u, l1) * std::pow(1.0 - u, -l2);
  };
  m.density = [C, l1, l2](double u) {
    return C * std::pow(u, l1 - 1.0) * std::pow(1.0 - u, -l2 - 1.0) *
           (l1 * (1.0 - u) + l2 * u);
  };
  m.density_from_survivor = [C, l1, l2](double s) {
    return C * std::pow(1.0 - s, l1 - 1.0) * std::pow(s, -l2 - 1.0) *
           (l1 * s + l2 * (1.0 - s));
  };
  m.support_floor = 0.0;
  return m;
}

QuantileModel make_govindarajulu(double theta, double sigma, double beta) {
  require(sigma > 0.0,
          "govindarajulu: sigma > 0 required, got sigma=" + format_param(sigma));
  require(beta > 0.0,
          "govindarajulu: beta > 0 required, got beta=" + format_param(beta));
  QuantileModel m;
  m.name = named("govindarajulu",
                 {{"theta", theta}, {"sigma", sigma}, {"beta", beta}});
  m.quantile = [theta, sigma, beta](double u) {
    return theta + sigma * ((beta + 1.0) * std::pow(u, beta) -
                            beta * std::pow(u, beta + 1.0));
  };
  m.density = [sigma, beta](double u) {
    return sigma * beta * (beta + 1.0) * std::pow(u, beta - 1.0) * (1.0 - u);
  };
  m.density_from_survivor = [sigma, beta](double s) {
    return sigma * beta * (beta + 1.0) * std::pow(1.0 - s, beta - 1.0) * s;
  };
  m.support_floor = theta;
  return m;
}

QuantileModel make_linear_mrq(double a, double b) {
  require(a + b > 4.0,
          "linear_mrq: a + b > 4 required so the density stays positive, got "
          "a+b=" +
              format_param(a + b));
  const double slope = a + b;
  QuantileModel m;
  m.name = named("linear_mrq", {{"a", a}, {"b", b}});
  m.quantile = [slope](double u) { return -slope * std::log1p(-u) - 4.0 * u; };
  m.density = [slope](double u) { return slope / (1.0 - u) - 4.0; };
  m.density_from_survivor = [slope](double s) { return slope / s - 4.0; };
  m.support_floor = 0.0;
  m.closed_form = [slope](double al) {
    return std::tgamma(al + 1.0) * (slope - std::pow(2.0, 1.0 - al));
  };
  return m;
}

QuantileModel make_constant(double k) {
  QuantileModel m;
  m.name = named("constant", {{"k", k}});
  m.quantile = [k](double) { return k; };
  m.density = [](double) { return 0.0; };
  m.density_from_survivor = [](double) { return 0.0; };
  m.support_floor = k;
  m.closed_form = [](double) { return 0.0; };
  return m;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "uniform",        "exponential",   "power",
      "pareto1",        "rescaled_beta", "lambda_family",
      "weibull_family", "power_pareto",  "govindarajulu",
      "linear_mrq",
  };
  return names;
}

namespace {

struct FamilyInfo {
  // One entry per parameter slot; each slot lists accepted spellings, the
  // first being canonical.
  std::vector<std::vector<std::string>> params;
  std::function<QuantileModel(const std::vector<double>&)> build;
};

const std::map<std::string, FamilyInfo>& family_table() {
  static const std::map<std::string, FamilyInfo> table = {
      {"uniform", {{{"b"}}, [](const auto& v) { return make_uniform(v[0]); }}},
      {"exponential",
       {{{"lambda"}}, [](const auto& v) { return make_exponential(v[0]); }}},
      {"power",
       {{{"beta"}, {"delta"}},
        [](const auto& v) { return make_power(v[0], v[1]); }}},
      {"pareto1", {{{"beta"}}, [](const auto& v) { return make_pareto1(v[0]); }}},
      {"rescaled_beta",
       {{{"c"}, {"r"}},
        [](const auto& v) { return make_rescaled_beta(v[0], v[1]); }}},
      {"lambda_family",
       {{{"C"}, {"A"}, {"beta"}},
        [](const auto& v) { return make_lambda_family(v[0], v[1], v[2]); }}},
      {"weibull_family",
       {{{"A"}, {"B"}},
        [](const auto& v) { return make_weibull_family(v[0], v[1]); }}},
      {"power_pareto",
       {{{"C"}, {"l1", "lambda1"}, {"l2", "lambda2"}},
        [](const auto& v) { return make_power_pareto(v[0], v[1], v[2]); }}},
      {"govindarajulu",
       {{{"theta"}, {"sigma"}, {"beta"}},
        [](const auto& v) { return make_govindarajulu(v[0], v[1], v[2]); }}},
      {"linear_mrq",
       {{{"a"}, {"b"}},
        [](const auto& v) { return make_linear_mrq(v[0], v[1]); }}},
  };
  return table;
}

[[noreturn]] void spec_error(std::string_view spec, std::size_t position,
                             const std::string& message) {
  throw ValidationError("model spec '" + std::string(spec) + "': " + message +
                        " at position " + std::to_string(position));
}

}  // namespace

QuantileModel parse_model_spec(std::string_view spec) {
  const std::string_view text = trim(spec);
  const auto open = text.find('(');
  if (open == std::string_view::npos) {
    spec_error(spec, text.size(), "expected '('");
  }
  if (text.empty() || text.back() != ')') {
    spec_error(spec, text.size(), "expected ')'");
  }
  const std::string family{trim(text.substr(0, open))};
  const auto it = family_table().find(family);
  if (it == family_table().end()) {
    std::string known;
    for (const auto& n : catalog_names()) {
      if (!known.empty()) known += ", ";
      known += n;
    }
    spec_error(spec, 0,
               "unknown model family '" + family + "' (known: " + known + ")");
  }
  const FamilyInfo& info = it->second;

  const std::string_view body = text.substr(open + 1, text.size() - open - 2);
  std::vector<double> values(info.params.size());
  std::vector<bool> seen(info.params.size(), false);

  std::size_t cursor = open + 1;
  for (const auto& raw : split(body, ',')) {
    const std::string_view token = trim(raw);
    const std::size_t token_pos = cursor;
    cursor += raw.size() + 1;
    if (token.empty()) {
      spec_error(spec, token_pos, "empty parameter token");
    }
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      spec_error(spec, token_pos,
                 "expected 'name=value' in token '" + std::string(token) + "'");
    }
    const std::string key{trim(token.substr(0, eq))};
    const std::string_view value_text = trim(token.substr(eq + 1));

    std::size_t slot = info.params.size();
    for (std::size_t i = 0; i < info.params.size(); ++i) {
      for (const auto& alias : info.params[i]) {
        if (key == alias) slot = i;
      }
    }
    if (slot == info.params.size()) {
      spec_error(spec, token_pos,
                 "unknown parameter '" + key + "' for family '" + family + "'");
    }
    if (seen[slot]) {
      spec_error(spec, token_pos, "duplicate parameter '" + key + "'");
    }
    const auto value = parse_double(value_text);
    if (!value) {
      spec_error(spec, token_pos,
                 "could not parse value '" + std::string(value_text) +
                     "' for parameter '" + key + "'");
    }
    seen[slot] = true;
    values[slot] = *value;
  }

  for (std::size_t i = 0; i < info.params.size(); ++i) {
    if (!seen[i]) {
      throw ValidationError("model spec '" + std::string(spec) +
                            "': missing parameter '" + info.params[i][0] +
                            "' for family '" + family + "'");
    }
  }
  return info.build(values);
}

}  // namespace qfcre
