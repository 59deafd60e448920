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

#ifndef MAXGENT_SOLVER_HPP_
#define MAXGENT_SOLVER_HPP_

#include <vector>

#include "maxgent/lp.hpp"
#include "maxgent/model.hpp"

namespace maxgent {

struct SolverOptions {
  double kkt_tol = 1e-8;
  double binding_tol = 1e-7;
  double zero_tol = 1e-9;
  double fw_gap_tol = 1e-10;
  int max_fw_iterations = 100000;
  int polish_every = 25;  // <= 0: plain Frank-Wolfe, no Newton polish
};

// Problem restricted to the coordinates that are not forced to zero.
struct ReducedProblem {
  Problem problem;
  int m_full = 0;
  std::vector<int> kept;       // reduced coordinate -> original coordinate
  std::vector<int> eq_rows;    // reduced equality row -> original row
  std::vector<int> ineq_rows;  // reduced inequality row -> original row
  std::vector<VectorXd> vertices;  // LP vertices maximizing each kept x_i
};

// Coordinates whose maximum over C(0) is zero are removed, together with
// the rows that become empty.
ReducedProblem eliminate_zeros(const Problem& p, double zero_tol = 1e-9);

struct Multipliers {
  VectorXd lambda_eq;
  VectorXd lambda_bind;
  std::vector<int> binding_rows;  // inequality rows of the given problem
  double residual = 0.0;
};

// Binding rows have slack <= binding_tol * (1 + |b_i|). Equality
// multipliers are free, binding ones non-negative.
Multipliers recover_multipliers(const Problem& p, const VectorXd& x,
                                double binding_tol = 1e-7);

struct Solution {
  ReducedProblem reduced;
  VectorXd x_star;  // over reduced coordinates, strictly positive
  VectorXd chi_star;
  double s_star = 0.0;
  double g_star = 0.0;
  VectorXd lambda_eq;
  VectorXd lambda_bind;
  std::vector<int> binding_rows;  // reduced inequality rows
  double lambda_star_bound = 0.0;
  double kkt_residual = 0.0;
  int fw_iterations = 0;

  int m() const { return static_cast<int>(x_star.size()); }
  const Problem& problem() const { return reduced.problem; }
  VectorXd x_full() const;
};

Solution maximize_G(const Problem& p, const SolverOptions& opts = {});

double lambda_star(const Solution& sol);

// The solution of the problem with data multiplied by c, built from sol.
Solution scale_solution(const Solution& sol, double c);

struct ScalingReport {
  double x_deviation = 0.0;       // |x*(cb) - c x*(b)|_inf / (c s*)
  double g_deviation = 0.0;       // |G*(cb) - c G*| / (c G*)
  double lambda_deviation = 0.0;  // max abs multiplier change
};

ScalingReport verify_scaling(const Solution& sol, const Problem& p, double c,
                             const SolverOptions& opts = {});

// Non-negative least squares min |E z - f| with z_i >= 0 for i >= n_free.
VectorXd nnls(const MatrixXd& e, const VectorXd& f, int n_free);

}  // namespace maxgent

#endif  // MAXGENT_SOLVER_HPP_
