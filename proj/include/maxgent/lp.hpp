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

#ifndef MAXGENT_LP_HPP_
#define MAXGENT_LP_HPP_

#include <limits>
#include <optional>

#include "maxgent/model.hpp"

namespace maxgent {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
enum class Sense { kMin, kMax };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  VectorXd x;
  double objective = 0.0;
};

// Feasibility tolerance after each row is divided by (1 + |b_i|).
inline constexpr double kLpFeasTol = 1e-8;

// Optimizes c.x subject to a_eq x = b_eq, a_ub x <= b_ub, x >= 0 with a
// two-phase dense tableau simplex using Bland's rule.
LpResult solve_lp_raw(const VectorXd& c, Sense sense, const MatrixXd& a_eq,
                      const VectorXd& b_eq, const MatrixXd& a_ub,
                      const VectorXd& b_ub);

// Same over C(0) of the problem.
LpResult solve_lp(const VectorXd& c, Sense sense, const Problem& p);

struct SumBounds {
  double s1 = 0.0;
  double s2 = 0.0;
};

SumBounds sum_bounds(const Problem& p);

struct AnalyticSumBounds {
  std::optional<double> s1_lower;
  std::optional<double> s2_upper;
};

AnalyticSumBounds analytic_sum_bounds(const Problem& p);

// Non-negative points within delta * theta_infinity (max norm) of C(0) lie
// in C(delta). Infinite with no constraints.
double theta_infinity(const Problem& p);

}  // namespace maxgent

#endif  // MAXGENT_LP_HPP_
