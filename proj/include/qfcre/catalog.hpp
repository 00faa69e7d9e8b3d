// SPDX-License-Identifier: Apache-2.0
// Built-in model families and the textual model-spec parser.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qfcre/model.hpp"

namespace qfcre {

// Uniform on [0, b]: Q = b u.
QuantileModel make_uniform(double b);
// Exponential rate lambda: Q = -log(1-u)/lambda, q = 1/(lambda (1-u)).
QuantileModel make_exponential(double lambda);
// Power: Q = beta u^delta (beta, delta > 0).
QuantileModel make_power(double beta, double delta);
// Pareto I: Q = (1-u)^{-beta} on [1, inf) (beta > 0).
QuantileModel make_pareto1(double beta);
// Rescaled beta: Q = c (1 - (1-u)^{1/r}) on [0, c] (c, r > 0).
QuantileModel make_rescaled_beta(double c, double r);
// Generalized lambda family via its density: q = C u^beta (1-u)^{-(A+beta)}
// (C > 0, beta > -1). Q is elementary only for beta = 0; other parameters
// fall back to on-demand quadrature of q.
QuantileModel make_lambda_family(double C, double A, double beta);
// Weibull-type quantile density: q = (1-u)^{-A} (-log(1-u))^{-B}
// (A > 0, B < 1). Q is elementary only for A = 1.
QuantileModel make_weibull_family(double A, double B);
// Power-Pareto: Q = C u^{l1} (1-u)^{-l2} (all parameters > 0).
QuantileModel make_power_pareto(double C, double l1, double l2);
// Govindarajulu: Q = theta + sigma ((beta+1) u^beta - beta u^{beta+1})
// (sigma, beta > 0).
QuantileModel make_govindarajulu(double theta, double sigma, double beta);
// Linear mean-residual quantile family: Q = -(a+b) log(1-u) - 4u, requiring
// a + b > 4 so that q = (a+b)/(1-u) - 4 stays positive on (0,1).
QuantileModel make_linear_mrq(double a, double b);

// Degenerate point mass at k (Q == k, q == 0). Not part of the public
// catalog or the spec-string grammar; provided as the algebraic identity
// element for composition tests.
QuantileModel make_constant(double k);

// Family names accepted by parse_model_spec.
const std::vector<std::string>& catalog_names();

// Parses "family(param=value,...)", e.g. "power_pareto(C=1.5,l1=2,l2=0.25)".
// Parameter names are case-sensitive; power_pareto accepts lambda1/lambda2
// as aliases for l1/l2. Throws ValidationError naming the offending token
// and its byte position on syntax errors, and naming the parameter and
// constraint on domain errors.
QuantileModel parse_model_spec(std::string_view spec);

}  // namespace qfcre
