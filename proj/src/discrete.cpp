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

#include "maxgent/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace maxgent {

std::int64_t ceil_sum(double s) {
  if (!std::isfinite(s)) fail(ErrorKind::kDomain, "non-finite sum");
  return static_cast<std::int64_t>(
      std::ceil(s - 1e-9 * std::max(1.0, std::abs(s))));
}

IntegerRange integer_range(const SumBounds& bounds, double s_star) {
  IntegerRange r;
  r.n1 = ceil_sum(bounds.s1);
  r.n2 = ceil_sum(bounds.s2);
  r.n_star = ceil_sum(s_star);
  return r;
}

VectorXd round_vector(const VectorXd& x) {
  return (x.array() + 0.5).floor().matrix();
}

CountVector optimal_count_vector(const VectorXd& x_star) {
  const int m = static_cast<int>(x_star.size());
  for (int i = 0; i < m; ++i)
    if (!(x_star(i) > 0.0))
      fail(ErrorKind::kDomain, "x* must be strictly positive");
  const double s = x_star.sum();
  const std::int64_t n = ceil_sum(s);
  std::vector<double> target(m), frac(m);
  std::vector<std::int64_t> nu(m);
  std::int64_t total = 0;
  for (int i = 0; i < m; ++i) {
    target[i] = static_cast<double>(n) * (x_star(i) / s);
    nu[i] = static_cast<std::int64_t>(std::floor(target[i] + 0.5));
    frac[i] = target[i] - std::floor(target[i]);
    total += nu[i];
  }
  std::int64_t d = total - n;
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  if (d < 0) {
    std::vector<int> cand;
    for (int i : order)
      if (static_cast<double>(nu[i]) <= target[i]) cand.push_back(i);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return frac[a] > frac[b]; });
    for (std::int64_t k = 0; k < -d && k < static_cast<std::int64_t>(cand.size());
         ++k)
      nu[cand[k]] += 1;
  } else if (d > 0) {
    std::vector<int> cand;
    for (int i : order)
      if (static_cast<double>(nu[i]) > target[i] && nu[i] > 0)
        cand.push_back(i);
    std::stable_sort(cand.begin(), cand.end(),
                     [&](int a, int b) { return frac[a] < frac[b]; });
    for (std::int64_t k = 0; k < d && k < static_cast<std::int64_t>(cand.size());
         ++k)
      nu[cand[k]] -= 1;
  }
  return CountVector(nu);
}

CountVector optimal_count_vector(const Solution& sol) {
  return optimal_count_vector(sol.x_star);
}

namespace {

void check_len(const VectorXd& v, const Problem& p) {
  if (v.size() != p.m)
    fail(ErrorKind::kStructure, "vector length " + std::to_string(v.size()) +
                                    " differs from m = " +
                                    std::to_string(p.m));
}

}  // namespace

bool membership(const VectorXd& v, const Problem& p, double delta) {
  check_len(v, p);
  if (!(delta >= 0.0)) fail(ErrorKind::kDomain, "delta must be >= 0");
  constexpr double kSlack = 1e-12;
  for (int i = 0; i < p.n_eq(); ++i) {
    double r = p.a_eq.row(i).dot(v) - p.b_eq(i);
    if (std::abs(r) > delta * p.beta_eq(i) + kSlack) return false;
  }
  for (int i = 0; i < p.n_ineq(); ++i) {
    double r = p.a_ineq.row(i).dot(v) - p.b_ineq(i);
    if (r > delta * p.beta_ineq(i) + kSlack) return false;
  }
  return true;
}

double min_delta(const VectorXd& v, const Problem& p) {
  check_len(v, p);
  double d = 0.0;
  for (int i = 0; i < p.n_eq(); ++i)
    d = std::max(d, std::abs(p.a_eq.row(i).dot(v) - p.b_eq(i)) / p.beta_eq(i));
  for (int i = 0; i < p.n_ineq(); ++i)
    d = std::max(d, (p.a_ineq.row(i).dot(v) - p.b_ineq(i)) / p.beta_ineq(i));
  return d;
}

double rounding_delta(double theta_inf) {
  if (!(theta_inf > 0.0)) fail(ErrorKind::kDomain, "theta_inf must be > 0");
  return 0.5 / theta_inf;
}

}  // namespace maxgent
