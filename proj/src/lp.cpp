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

#include "maxgent/lp.hpp"

#include <cmath>
#include <vector>

namespace maxgent {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kCostTol = 1e-10;
constexpr int kMaxPivots = 200000;

struct Tableau {
  MatrixXd t;  // rows x (cols + 1); last column is the rhs
  std::vector<int> basis;
  int cols = 0;

  double& rhs(int r) { return t(r, cols); }

  void pivot(int r, int j) {
    t.row(r) /= t(r, j);
    for (int i = 0; i < t.rows(); ++i) {
      if (i == r) continue;
      double f = t(i, j);
      if (f != 0.0) t.row(i) -= f * t.row(r);
    }
    basis[r] = j;
  }
};

// Minimizes z.x over the tableau rows, where z holds the reduced costs in
// the last row. Columns >= limit never enter. Returns false if unbounded.
bool run_simplex(Tableau& tb, int obj_row, int limit) {
  for (int iter = 0; iter < kMaxPivots; ++iter) {
    int enter = -1;
    for (int j = 0; j < limit; ++j) {
      if (tb.t(obj_row, j) < -kCostTol) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return true;
    int leave = -1;
    double best = 0.0;
    for (int r = 0; r < obj_row; ++r) {
      double a = tb.t(r, enter);
      if (a <= kPivotTol) continue;
      double ratio = std::max(tb.rhs(r), 0.0) / a;
      double slack = 1e-12 * (1.0 + best);
      if (leave < 0 || ratio < best - slack) {
        leave = r;
        best = ratio;
      } else if (ratio <= best + slack && tb.basis[r] < tb.basis[leave]) {
        leave = r;
        best = std::min(best, ratio);
      }
    }
    if (leave < 0) return false;
    tb.pivot(leave, enter);
  }
  fail(ErrorKind::kInternal, "simplex pivot limit reached");
}

}  // namespace

LpResult solve_lp_raw(const VectorXd& c, Sense sense, const MatrixXd& a_eq,
                      const VectorXd& b_eq, const MatrixXd& a_ub,
                      const VectorXd& b_ub) {
  const int n = static_cast<int>(c.size());
  const int me = static_cast<int>(b_eq.size());
  const int mu = static_cast<int>(b_ub.size());
  const int rows = me + mu;
  const int n_art = rows;
  const int cols = n + mu + n_art;

  Tableau tb;
  tb.cols = cols;
  tb.t = MatrixXd::Zero(rows + 1, cols + 1);
  tb.basis.assign(rows, 0);
  for (int i = 0; i < rows; ++i) {
    bool eq = i < me;
    double b = eq ? b_eq(i) : b_ub(i - me);
    double scale = 1.0 / (1.0 + std::abs(b));
    for (int j = 0; j < n; ++j)
      tb.t(i, j) = (eq ? a_eq(i, j) : a_ub(i - me, j)) * scale;
    if (!eq) tb.t(i, n + (i - me)) = 1.0;
    tb.rhs(i) = b * scale;
    if (tb.rhs(i) < 0.0) tb.t.row(i) *= -1.0;
    tb.t(i, n + mu + i) = 1.0;
    tb.basis[i] = n + mu + i;
  }

  // Phase 1: minimize the sum of artificials.
  const int z = rows;
  for (int i = 0; i < rows; ++i) tb.t.row(z) -= tb.t.row(i);
  for (int i = 0; i < rows; ++i) tb.t(z, n + mu + i) = 0.0;
  run_simplex(tb, z, n + mu);
  LpResult res;
  if (-tb.rhs(z) > kLpFeasTol) {
    res.status = LpStatus::kInfeasible;
    return res;
  }

  // Drive artificials out of the basis; rows where that fails are redundant.
  std::vector<int> keep;
  for (int r = 0; r < rows; ++r) {
    if (tb.basis[r] >= n + mu) {
      int j = 0;
      for (; j < n + mu; ++j)
        if (std::abs(tb.t(r, j)) > kPivotTol) break;
      if (j < n + mu) {
        tb.pivot(r, j);
      } else {
        continue;
      }
    }
    keep.push_back(r);
  }
  if (static_cast<int>(keep.size()) < rows) {
    Tableau reduced;
    reduced.cols = cols;
    reduced.t = MatrixXd::Zero(keep.size() + 1, cols + 1);
    for (size_t k = 0; k < keep.size(); ++k) {
      reduced.t.row(k) = tb.t.row(keep[k]);
      reduced.basis.push_back(tb.basis[keep[k]]);
    }
    tb = std::move(reduced);
  }

  // Phase 2.
  const int nr = static_cast<int>(tb.basis.size());
  VectorXd cost = VectorXd::Zero(cols);
  cost.head(n) = sense == Sense::kMin ? c : VectorXd(-c);
  tb.t.row(nr).setZero();
  tb.t.row(nr).head(cols) = cost.transpose();
  for (int r = 0; r < nr; ++r) {
    double cb = cost(tb.basis[r]);
    if (cb != 0.0) tb.t.row(nr) -= cb * tb.t.row(r);
  }
  if (!run_simplex(tb, nr, n + mu)) {
    res.status = LpStatus::kUnbounded;
    return res;
  }
  res.status = LpStatus::kOptimal;
  res.x = VectorXd::Zero(n);
  for (int r = 0; r < nr; ++r)
    if (tb.basis[r] < n) res.x(tb.basis[r]) = std::max(tb.rhs(r), 0.0);
  res.objective = c.dot(res.x);
  return res;
}

LpResult solve_lp(const VectorXd& c, Sense sense, const Problem& p) {
  if (c.size() != p.m)
    fail(ErrorKind::kStructure, "objective length differs from m");
  return solve_lp_raw(c, sense, p.a_eq, p.b_eq, p.a_ineq, p.b_ineq);
}

SumBounds sum_bounds(const Problem& p) {
  VectorXd ones = VectorXd::Ones(p.m);
  LpResult lo = solve_lp(ones, Sense::kMin, p);
  if (lo.status == LpStatus::kInfeasible)
    fail(ErrorKind::kInfeasible, "constraints are infeasible");
  LpResult hi = solve_lp(ones, Sense::kMax, p);
  if (hi.status == LpStatus::kUnbounded)
    fail(ErrorKind::kUnbounded,
         "problem admits arbitrarily large solutions");
  if (hi.status != LpStatus::kOptimal || lo.status != LpStatus::kOptimal)
    fail(ErrorKind::kInfeasible, "constraints are infeasible");
  return {lo.objective, hi.objective};
}

AnalyticSumBounds analytic_sum_bounds(const Problem& p) {
  AnalyticSumBounds out;
  if (p.n_eq() > 0) {
    double col_norm = p.a_eq.cwiseAbs().colwise().sum().maxCoeff();
    if (col_norm > 0.0) out.s1_lower = p.b_eq.lpNorm<1>() / col_norm;
  }
  bool nonneg = (p.n_eq() == 0 || (p.a_eq.minCoeff() >= 0.0 &&
                                   p.b_eq.minCoeff() >= 0.0)) &&
                (p.n_ineq() == 0 || (p.a_ineq.minCoeff() >= 0.0 &&
                                     p.b_ineq.minCoeff() >= 0.0));
  if (!nonneg || p.n_eq() + p.n_ineq() == 0) return out;
  VectorXd cover = VectorXd::Zero(p.m);
  if (p.n_eq() > 0) cover += p.a_eq.colwise().sum().transpose();
  if (p.n_ineq() > 0) cover += p.a_ineq.colwise().sum().transpose();
  if (cover.minCoeff() <= 0.0) return out;
  auto add_rows = [](const MatrixXd& a, const VectorXd& b) {
    double total = 0.0;
    for (Eigen::Index i = 0; i < b.size(); ++i) {
      double alpha = 1.0;
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        if (a(i, j) > 0.0) alpha = std::min(alpha, a(i, j));
      total += b(i) / alpha;
    }
    return total;
  };
  out.s2_upper = add_rows(p.a_eq, p.b_eq) + add_rows(p.a_ineq, p.b_ineq);
  return out;
}

double theta_infinity(const Problem& p) {
  double theta = std::numeric_limits<double>::infinity();
  auto part = [&](const MatrixXd& a, const VectorXd& beta) {
    if (beta.size() == 0) return;
    double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
    if (norm > 0.0) theta = std::min(theta, beta.minCoeff() / norm);
  };
  part(p.a_eq, p.beta_eq);
  part(p.a_ineq, p.beta_ineq);
  return theta;
}

}  // namespace maxgent
