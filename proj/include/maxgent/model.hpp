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

#ifndef MAXGENT_MODEL_HPP_
#define MAXGENT_MODEL_HPP_

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "maxgent/errors.hpp"

namespace maxgent {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Constraint system A_eq x = b_eq, A_ineq x <= b_ineq, x >= 0.
struct Problem {
  int m = 0;
  MatrixXd a_eq;
  VectorXd b_eq;
  MatrixXd a_ineq;
  VectorXd b_ineq;
  VectorXd beta_eq;
  VectorXd beta_ineq;
  double beta_substitute = 1.0;

  int n_eq() const { return static_cast<int>(b_eq.size()); }
  int n_ineq() const { return static_cast<int>(b_ineq.size()); }
};

// Builds a problem and fills the beta vectors. Throws kStructure on
// dimension mismatch.
Problem make_problem(int m, const MatrixXd& a_eq, const VectorXd& b_eq,
                     const MatrixXd& a_ineq, const VectorXd& b_ineq,
                     double beta_substitute = 1.0);

struct Tolerances {
  double delta = 0.0;
  double epsilon = 0.0;
  std::optional<double> eta;
  std::optional<double> theta;
};

void check_tolerances(const Tolerances& t);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate_problem(const Problem& p);

Problem scale_problem(const Problem& p, double c);

VectorXd effective_beta(const VectorXd& b, double substitute);

Problem problem_from_json(const std::string& text);
std::string problem_to_json(const Problem& p);
Problem load_problem(const std::string& path);
void save_problem(const Problem& p, const std::string& path);

}  // namespace maxgent

#endif  // MAXGENT_MODEL_HPP_
