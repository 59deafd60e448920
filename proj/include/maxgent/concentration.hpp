// Copyright 2026 The maxgent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAXGENT_CONCENTRATION_HPP_
#define MAXGENT_CONCENTRATION_HPP_

#include "maxgent/lp.hpp"
#include "maxgent/model.hpp"
#include "maxgent/solver.hpp"

namespace maxgent {

struct BetaStar {
  double beta = 0.0;
  bool exact = true;
};

// Exhaustive over subsets for m <= 24; otherwise (1 - max chi) / 2.
BetaStar balance_beta_star(const VectorXd& chi);

double pinsker_gamma_star(double beta_star);

struct GammaStar {
  double beta = 0.0;
  double gamma = 0.5;
  bool exact = true;  // false: fallback gamma = 1/2
};

GammaStar gamma_star_for(const VectorXd& chi);

// Largest root c of a c - m ln c = rhs, or 1 when a c - m ln c >= rhs for
// every c >= 1.
double solve_exp_linear(double a, int m, double rhs);

// Logs of the constants shared by the two families of bounds.
struct LogConstants {
  double log_k = 0.0;   // (m+1) Gamma(m/2) e^{-m/12} / (2 pi^{m/2})
  double log_c0 = 0.0;
  double log_c2 = 0.0;
  double log_c3 = 0.0;
  double log_c4 = 0.0;
  double sum_inv = 0.0;      // sum 1/(x_i - 1)
  double sum_log_inv = 0.0;  // sum ln(1/chi_i)
};

LogConstants log_constants(const Solution& sol, const SumBounds& bounds);

struct RatioBound {
  double log_bound = 0.0;
  bool useful = true;
};

RatioBound ratio_bound_entropy(const Solution& sol, const SumBounds& bounds,
                               double eta);
RatioBound ratio_bound_distance(const Solution& sol, const SumBounds& bounds,
                                double delta, double theta);

struct EntropyThresholdReport {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, c_hat = 0.0;
  double B = 0.0, log_B = 0.0;
  double C0 = 0.0, C2 = 0.0, C3 = 0.0, C4 = 0.0;
  double lower = 0.0, upper = 0.0;
  double eta = 0.0, delta = 0.0, epsilon = 0.0;
};

EntropyThresholdReport threshold_entropy(const Solution& sol,
                                         const SumBounds& bounds,
                                         double theta_inf,
                                         const Tolerances& tol);

struct ThresholdBounds {
  double lower = 0.0;
  double upper = 0.0;
};

ThresholdBounds threshold_bounds_entropy(const Solution& sol,
                                         const SumBounds& bounds,
                                         double theta_inf,
                                         const Tolerances& tol);

struct DistanceThresholdReport {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, c_hat = 0.0;
  double B_prime = 0.0, log_B_prime = 0.0;
  double C3_dprime = 0.0, log_C3_dprime = 0.0;
  double gamma_star = 0.5, beta_star = 0.0, lambda_star = 0.0;
  bool gamma_exact = true;
  double theta = 0.0, delta = 0.0, epsilon = 0.0;
  bool delta_condition_ok = false;
  double theta_min = 0.0;  // smallest theta allowed for this delta
};

// Condition theta^2 > Lambda* delta / (2 gamma* s1), without throwing.
DistanceThresholdReport distance_condition(const Solution& sol,
                                           const SumBounds& bounds,
                                           double delta, double theta);

DistanceThresholdReport threshold_distance(const Solution& sol,
                                           const SumBounds& bounds,
                                           double theta_inf,
                                           const Tolerances& tol);

struct AutoDeltaReport {
  double delta0 = 0.0;
  double c_hat = 0.0;
  double lower = 0.0;
  DistanceThresholdReport at_delta0;
};

AutoDeltaReport threshold_auto_delta(const Solution& sol,
                                     const SumBounds& bounds,
                                     double theta_inf, double epsilon,
                                     double theta);

double threshold_lower_bound_distance(const Solution& sol, double theta_inf,
                                      double theta);

}  // namespace maxgent

#endif  // MAXGENT_CONCENTRATION_HPP_
