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

#include "maxgent/concentration.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "maxgent/entropy.hpp"

namespace maxgent {

namespace {

constexpr int kExactBetaMaxDim = 24;

double log_add_exp(double a, double b) {
  double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v))
    fail(ErrorKind::kDomain, std::string(name) + " must be positive");
}

}  // namespace

BetaStar balance_beta_star(const VectorXd& chi) {
  const int m = static_cast<int>(chi.size());
  if (m == 0 || chi.minCoeff() < 0.0 || std::abs(chi.sum() - 1.0) > 1e-9)
    fail(ErrorKind::kDomain, "beta* needs a density vector");
  BetaStar out;
  if (m > kExactBetaMaxDim) {
    out.beta = 0.5 * (1.0 - chi.maxCoeff());
    out.exact = false;
    return out;
  }
  // Gray-code walk over subsets of {1..m-1}; complements cover the rest.
  double best = 0.0, sum = 0.0;
  const std::uint64_t count = std::uint64_t{1} << (m - 1);
  for (std::uint64_t k = 1; k < count; ++k) {
    int bit = std::countr_zero(k);
    std::uint64_t gray = k ^ (k >> 1);
    if (gray & (std::uint64_t{1} << bit))
      sum += chi(bit + 1);
    else
      sum -= chi(bit + 1);
    best = std::max(best, std::min(sum, 1.0 - sum));
  }
  out.beta = std::clamp(best, 0.0, 0.5);
  return out;
}

double pinsker_gamma_star(double beta_star) {
  if (!(beta_star >= 0.0 && beta_star <= 0.5))
    fail(ErrorKind::kDomain, "beta* must lie in [0, 1/2]");
  if (beta_star == 0.5) return 0.5;
  if (beta_star == 0.0) return std::numeric_limits<double>::infinity();
  double u = 1.0 - 2.0 * beta_star;
  // ln((1-b)/b) = ln((1+u)/(1-u)) = 2 atanh(u)
  return 2.0 * std::atanh(u) / (4.0 * u);
}

GammaStar gamma_star_for(const VectorXd& chi) {
  BetaStar b = balance_beta_star(chi);
  GammaStar g;
  g.beta = b.beta;
  g.exact = b.exact;
  g.gamma = b.exact ? pinsker_gamma_star(b.beta) : 0.5;
  return g;
}

double solve_exp_linear(double a, int m, double rhs) {
  if (!(a > 0.0) || !std::isfinite(a))
    fail(ErrorKind::kDomain, "solve_exp_linear needs a > 0");
  if (m < 0) fail(ErrorKind::kDomain, "solve_exp_linear needs m >= 0");
  if (!std::isfinite(rhs)) fail(ErrorKind::kDomain, "non-finite rhs");
  if (m == 0) return std::max(rhs / a, 1.0);
  auto f = [&](double c) { return a * c - m * std::log(c) - rhs; };
  double lo = std::max(m / a, 1.0);
  if (f(lo) >= 0.0) return 1.0;
  double hi = 2.0 * lo;
  for (int k = 0; f(hi) < 0.0; ++k) {
    if (k > 2000)
      fail(ErrorKind::kInternal, "solve_exp_linear: root not bracketed (a = " +
                                     std::to_string(a) + ", rhs = " +
                                     std::to_string(rhs) + ")");
    lo = hi;
    hi *= 2.0;
  }
  for (int k = 0; k < 200; ++k) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

LogConstants log_constants(const Solution& sol, const SumBounds& bounds) {
  const VectorXd& x = sol.x_star;
  const int m = sol.m();
  for (int i = 0; i < m; ++i)
    if (!(x(i) > 1.0))
      fail(ErrorKind::kPrecondition,
           "x* must exceed 1 in every coordinate (coordinate " +
               std::to_string(i) + " is " + std::to_string(x(i)) +
               "); pre-scale the data");
  const double s = sol.s_star;
  const double md = m;
  LogConstants k;
  k.log_k = std::log(md + 1.0) + std::lgamma(md / 2.0) - md / 12.0 -
            std::log(2.0) - 0.5 * md * std::log(std::numbers::pi);
  double prod = 0.0;
  for (int i = 0; i < m; ++i) {
    double chi = x(i) / s;
    prod += std::log(chi) - 0.5 * std::log(x(i) + 1.0);
    k.sum_inv += 1.0 / (x(i) - 1.0);
    k.sum_log_inv -= std::log(chi);
  }
  k.log_c2 = 0.5 * std::log(s) + prod;
  k.log_c4 = -0.5 * (k.sum_inv - md / (s / md - 1.0));
  double la = std::log(std::sqrt(md) + std::sqrt(bounds.s2 + 2.0));
  double lb = std::log(std::sqrt(md) + std::sqrt(bounds.s1));
  k.log_c3 = (md + 1.0) * la + std::log(-std::expm1((md + 1.0) * (lb - la)));
  k.log_c0 = -md / 12.0 - 0.5 * (md - 1.0) * std::log(2.0 * std::numbers::pi) +
             k.log_c2 + k.log_c4;
  return k;
}

RatioBound ratio_bound_entropy(const Solution& sol, const SumBounds& bounds,
                               double eta) {
  require_positive(eta, "eta");
  LogConstants k = log_constants(sol, bounds);
  RatioBound r;
  r.log_bound = k.log_k + k.log_c2 + k.log_c4 - k.log_c3 + eta * sol.g_star;
  return r;
}

RatioBound ratio_bound_distance(const Solution& sol, const SumBounds& bounds,
                                double delta, double theta) {
  if (!(delta >= 0.0)) fail(ErrorKind::kDomain, "delta must be >= 0");
  require_positive(theta, "theta");
  LogConstants k = log_constants(sol, bounds);
  GammaStar g = gamma_star_for(sol.chi_star);
  const double md = sol.m();
  const double gt = g.gamma * theta * theta;
  double c3p = log_add_exp(
      (md + 1.0) * std::log(std::sqrt(bounds.s2 + 2.0) + std::sqrt(md)) -
          gt * (sol.s_star + 1.0),
      (md + 1.0) * std::log(std::sqrt(sol.s_star + 2.0) + std::sqrt(md)) -
          gt * bounds.s1);
  double expo = gt * bounds.s1 - sol.lambda_star_bound * delta;
  RatioBound r;
  r.log_bound = k.log_k + k.log_c2 + k.log_c4 - c3p + expo;
  r.useful = expo > 0.0;
  return r;
}

namespace {

void check_threshold_inputs(double theta_inf, const Tolerances& tol) {
  check_tolerances(tol);
  require_positive(tol.delta, "delta");
  if (!(theta_inf > 0.0)) fail(ErrorKind::kDomain, "theta_inf must be > 0");
}

}  // namespace

EntropyThresholdReport threshold_entropy(const Solution& sol,
                                         const SumBounds& bounds,
                                         double theta_inf,
                                         const Tolerances& tol) {
  check_threshold_inputs(theta_inf, tol);
  if (!tol.eta) fail(ErrorKind::kDomain, "entropy threshold needs eta");
  LogConstants k = log_constants(sol, bounds);
  const int m = sol.m();
  EntropyThresholdReport r;
  r.eta = *tol.eta;
  r.delta = tol.delta;
  r.epsilon = tol.epsilon;
  r.log_B = k.log_k + k.log_c2 - k.log_c3 - 0.5 * k.sum_inv;
  r.B = std::exp(r.log_B);
  r.C0 = std::exp(k.log_c0);
  r.C2 = std::exp(k.log_c2);
  r.C3 = std::exp(k.log_c3);
  r.C4 = std::exp(k.log_c4);
  const double a = r.eta * sol.g_star;
  const double rhs = -std::log(tol.epsilon) - r.log_B;
  r.c1 = solve_exp_linear(a, m, rhs);
  r.c2 = 1.0 / (tol.delta * theta_inf);
  const double s2 = k.sum_log_inv, s1 = 0.5 * k.sum_inv;
  r.c3 = (s2 + std::sqrt(s2 * s2 + 4.0 * a * s1)) / (2.0 * a);
  r.c_hat = std::max({r.c1, r.c2, r.c3});
  ThresholdBounds b = threshold_bounds_entropy(sol, bounds, theta_inf, tol);
  r.lower = b.lower;
  r.upper = b.upper;
  return r;
}

ThresholdBounds threshold_bounds_entropy(const Solution& sol,
                                         const SumBounds& bounds,
                                         double theta_inf,
                                         const Tolerances& tol) {
  check_threshold_inputs(theta_inf, tol);
  if (!tol.eta) fail(ErrorKind::kDomain, "entropy threshold needs eta");
  LogConstants k = log_constants(sol, bounds);
  const double md = sol.m();
  const double a = *tol.eta * sol.g_star;
  const double log_b = k.log_k + k.log_c2 - k.log_c3 - 0.5 * k.sum_inv;
  const double rhs = -std::log(tol.epsilon) - log_b;
  const double c2 = 1.0 / (tol.delta * theta_inf);
  ThresholdBounds b;
  b.lower = std::max(rhs / a, c2);
  // c1 solves c >= alpha ln c + beta.
  const double alpha = md / a, beta = rhs / a;
  double u1 = alpha + beta >= 1.0
                  ? 2.0 * alpha * std::log(alpha + beta) + beta
                  : 1.0;
  double u3 = std::sqrt(k.sum_inv / (2.0 * a));
  b.upper = std::max({u1, c2, u3});
  return b;
}

DistanceThresholdReport distance_condition(const Solution& sol,
                                           const SumBounds& bounds,
                                           double delta, double theta) {
  GammaStar g = gamma_star_for(sol.chi_star);
  DistanceThresholdReport r;
  r.gamma_star = g.gamma;
  r.beta_star = g.beta;
  r.gamma_exact = g.exact;
  r.lambda_star = sol.lambda_star_bound;
  r.theta = theta;
  r.delta = delta;
  r.theta_min =
      std::sqrt(r.lambda_star * delta / (2.0 * g.gamma * bounds.s1));
  r.delta_condition_ok = theta * theta > r.lambda_star * delta /
                                             (2.0 * g.gamma * bounds.s1);
  return r;
}

namespace {

// ln C3'' and ln B' at the given theta.
void distance_constants(const Solution& sol, const SumBounds& bounds,
                        double gamma, double theta, double& log_c3pp,
                        double& log_bp) {
  LogConstants k = log_constants(sol, bounds);
  const double md = sol.m();
  const double gt = gamma * theta * theta;
  log_c3pp = log_add_exp(
      (md + 1.0) * std::log(std::sqrt(bounds.s2 + 2.0) + std::sqrt(md)) - gt -
          gt * (sol.s_star - bounds.s1),
      (md + 1.0) * std::log(std::sqrt(sol.s_star + 2.0) + std::sqrt(md)));
  log_bp = k.log_k + k.log_c2 - 0.5 * k.sum_inv;
}

}  // namespace

DistanceThresholdReport threshold_distance(const Solution& sol,
                                           const SumBounds& bounds,
                                           double theta_inf,
                                           const Tolerances& tol) {
  check_threshold_inputs(theta_inf, tol);
  if (!tol.theta) fail(ErrorKind::kDomain, "distance threshold needs theta");
  const double theta = *tol.theta;
  DistanceThresholdReport r = distance_condition(sol, bounds, tol.delta, theta);
  r.epsilon = tol.epsilon;
  if (!r.delta_condition_ok)
    fail(ErrorKind::kCondition,
         "condition theta^2 > Lambda* delta / (2 gamma* s1) fails; need theta > " +
             std::to_string(r.theta_min) + " for delta = " +
             std::to_string(tol.delta));
  distance_constants(sol, bounds, r.gamma_star, theta, r.log_C3_dprime,
                     r.log_B_prime);
  r.C3_dprime = std::exp(r.log_C3_dprime);
  r.B_prime = std::exp(r.log_B_prime);
  const int m = sol.m();
  r.c1 = (0.75 * m + 1.0) / (theta * sol.s_star);
  r.c2 = 1.0 / (tol.delta * theta_inf);
  const double a = 2.0 * r.gamma_star * theta * theta * bounds.s1 -
                   r.lambda_star * tol.delta;
  r.c3 = solve_exp_linear(
      a, m, r.log_C3_dprime - std::log(tol.epsilon) - r.log_B_prime);
  r.c_hat = std::max({r.c1, r.c2, r.c3});
  return r;
}

AutoDeltaReport threshold_auto_delta(const Solution& sol,
                                     const SumBounds& bounds,
                                     double theta_inf, double epsilon,
                                     double theta) {
  require_positive(epsilon, "epsilon");
  require_positive(theta, "theta");
  if (!(theta_inf > 0.0) || !std::isfinite(theta_inf))
    fail(ErrorKind::kDomain, "theta_inf must be finite and > 0");
  const int m = sol.m();
  GammaStar g = gamma_star_for(sol.chi_star);
  const double lam = sol.lambda_star_bound;
  if (!(lam >= m * theta_inf))
    fail(ErrorKind::kCondition,
         "condition Lambda* >= m theta_inf fails (" + std::to_string(lam) +
             " < " + std::to_string(m * theta_inf) + ")");
  const double theta_cap2 = lam * std::sqrt(sol.s_star / m + 1.0) /
                            (g.gamma * theta_inf * bounds.s1) *
                            std::pow(epsilon, -1.0 / m);
  if (!(theta * theta < theta_cap2))
    fail(ErrorKind::kCondition,
         "condition theta^2 < Lambda* sqrt(s*/m + 1) / (gamma* theta_inf s1) "
         "eps^(-1/m) fails; need theta < " +
             std::to_string(std::sqrt(theta_cap2)));
  double log_c3pp = 0.0, log_bp = 0.0;
  distance_constants(sol, bounds, g.gamma, theta, log_c3pp, log_bp);
  const double big_r = log_c3pp - std::log(epsilon) - log_bp +
                       lam / theta_inf - m * std::log(theta_inf);
  const double kk = 2.0 * g.gamma * theta * theta * bounds.s1 / theta_inf;
  auto f = [&](double d) { return kk / d + m * std::log(d) - big_r; };
  const double dmax = 2.0 * g.gamma * theta * theta * bounds.s1 / lam;
  double lo = dmax * 1e-18, hi = dmax;
  if (f(hi) > 0.0)
    fail(ErrorKind::kCondition,
         "no root for delta0 in (0, 2 gamma* theta^2 s1 / Lambda*]");
  if (f(lo) < 0.0)
    fail(ErrorKind::kInternal, "delta0 bracket does not change sign");
  for (int k = 0; k < 200; ++k) {
    double mid = std::sqrt(lo * hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  AutoDeltaReport out;
  out.delta0 = lo;
  out.c_hat = std::max(1.0 / (lo * theta_inf),
                       (0.75 * m + 1.0) / (theta * sol.s_star));
  out.lower = threshold_lower_bound_distance(sol, theta_inf, theta);
  Tolerances tol;
  tol.delta = lo;
  tol.epsilon = epsilon;
  tol.theta = theta;
  out.at_delta0 = threshold_distance(sol, bounds, theta_inf, tol);
  return out;
}

double threshold_lower_bound_distance(const Solution& sol, double theta_inf,
                                      double theta) {
  require_positive(theta, "theta");
  GammaStar g = gamma_star_for(sol.chi_star);
  const double h = ext_entropy(sol.chi_star);
  return std::max(h / (2.0 * g.gamma) / (theta_inf * theta * theta),
                  0.75 * sol.m() / (sol.s_star * theta));
}

}  // namespace maxgent
