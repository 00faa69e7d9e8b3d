// SPDX-License-Identifier: Apache-2.0
// Fractional cumulative residual entropy in the quantile framework:
// static, dynamic (residual), escort factorization, and the
// distribution-side oracle.

#pragma once

#include <functional>
#include <vector>

#include "qfcre/model.hpp"
#include "qfcre/quadrature.hpp"

namespace qfcre {

enum class Method { closed_form, quadrature, oracle };
const char* method_name(Method m);

struct EntropyValue {
  double value = 0.0;
  double alpha = 0.0;
  Method method = Method::quadrature;
  double est_error = 0.0;  // 0 for closed forms
};

// E_alpha(X) = integral_0^1 (1-p) (-log(1-p))^alpha q(p) dp. Computed on the
// transformed domain t = -log(1-p); uses the model's closed form when
// available unless cfg.force_quadrature is set.
EntropyValue qfcre(const QuantileModel& m, FractionalOrder alpha,
                   const QuadratureConfig& cfg = {});

// Residual (dynamic) entropy conditioned at quantile level u in [0,1):
// (1/(1-u)) integral_u^1 (1-p) (log(1-u) - log(1-p))^alpha q(p) dp.
// Always integrates; at u = 0 it coincides with the qfcre integral.
EntropyValue qdfcre(const QuantileModel& m, FractionalOrder alpha, double u,
                    const QuadratureConfig& cfg = {});

// alpha = 1 specialization (cumulative residual entropy); delegates to qfcre.
EntropyValue qcre(const QuantileModel& m, const QuadratureConfig& cfg = {});

// integral_0^1 log q(p) dp (may be negative); the quantile form of
// differential entropy, used by the Shannon lower-bound check.
double quantile_shannon_entropy(const QuantileModel& m,
                                const QuadratureConfig& cfg = {});

// C(alpha) = exp(integral_0^1 log[(1-p)(-log(1-p))^alpha] dp)
//          = exp(-1 - gamma_E * alpha).
double shannon_bound_constant(FractionalOrder alpha);

struct EscortFactorization {
  double normalizer = 0.0;        // I_c = integral_0^1 q^{1-c} dp
  double weighted_entropy = 0.0;  // integral_0^1 (1-p)(-log(1-p))^alpha q^c dp
  double product = 0.0;           // normalizer * weighted_entropy
};

// Factorized entropy of the order-c escort model; `product` equals
// qfcre(escort_transform(m, c), alpha) wherever both sides converge.
EscortFactorization escort_factorization(const QuantileModel& m, double c,
                                         FractionalOrder alpha,
                                         const QuadratureConfig& cfg = {});

// Distribution-side cross-check:
//     integral_0^upper S(x) (-log S(x))^alpha dx
// for a survival function S nonincreasing from 1 to 0. `upper` must carry
// all but a negligible tail (below abs_tol scale); insufficient truncation
// is rejected as a precondition violation.
EntropyValue fcre_distribution_oracle(
    const std::function<double(double)>& survival, FractionalOrder alpha,
    double upper, const QuadratureConfig& cfg = {});

enum class ProfileShape { constant, increasing, decreasing, non_monotone };
const char* profile_shape_name(ProfileShape s);

struct DynamicProfile {
  std::vector<double> u;
  std::vector<EntropyValue> values;
  ProfileShape shape = ProfileShape::constant;
};

// qdfcre along a strictly increasing grid in [0,1), with a monotonicity
// classification using absolute tolerance 1e-9 on successive differences
// (ties classify as constant).
DynamicProfile qdfcre_profile(const QuantileModel& m, FractionalOrder alpha,
                              const std::vector<double>& grid,
                              const QuadratureConfig& cfg = {});

}  // namespace qfcre
