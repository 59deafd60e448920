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

// Problems shared by the unit tests and the acceptance binary.
#ifndef MAXGENT_TESTS_GOLDEN_HPP_
#define MAXGENT_TESTS_GOLDEN_HPP_

#include <random>

#include "maxgent/model.hpp"

namespace golden {

using maxgent::MatrixXd;
using maxgent::Problem;
using maxgent::VectorXd;

// x1 + x2 = a, x2 + x3 <= b.
inline Problem balls(double a = 4.0, double b = 6.0) {
  MatrixXd ae(1, 3);
  ae << 1, 1, 0;
  VectorXd be(1);
  be << a;
  MatrixXd ai(1, 3);
  ai << 0, 1, 1;
  VectorXd bi(1);
  bi << b;
  return maxgent::make_problem(3, ae, be, ai, bi);
}

inline Problem network() {
  MatrixXd ae(3, 6);
  ae << 1, 0, 0, 1, 0, 1,
        0, 0, 1, 0, 1, 1,
        0, 1, 0, 1, 1, 0;
  VectorXd be(3);
  be << 10.5, 18.3, 8.7;
  MatrixXd ai = MatrixXd::Zero(3, 6);
  ai(0, 3) = 1;
  ai(1, 4) = 1;
  ai(2, 5) = 1;
  VectorXd bi = VectorXd::Constant(3, 4.0);
  return maxgent::make_problem(6, ae, be, ai, bi);
}

// 4x4 traffic matrix, row-major v_ij at 4i + j.
inline Problem cities() {
  MatrixXd ae = MatrixXd::Zero(4, 16);
  VectorXd be = VectorXd::Zero(4);
  for (int i = 0; i < 4; ++i) ae(i, 5 * i) = 1;
  MatrixXd ai = MatrixXd::Zero(7, 16);
  VectorXd bi(7);
  const double caps[4] = {100, 120, 80, 90};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) ai(i, 4 * i + j) = 1;
    bi(i) = caps[i];
  }
  ai(4, 6) = ai(4, 7) = -1;
  bi(4) = -80;
  ai(5, 8) = ai(5, 12) = -1;
  bi(5) = -59;
  ai(6, 3) = ai(6, 7) = ai(6, 11) = -1;
  bi(6) = -70;
  return maxgent::make_problem(16, ae, be, ai, bi);
}

// Box-bounded problem: m variables, x_i <= u_i, plus one random
// non-negative equality or inequality row. Always bounded and feasible.
inline Problem random_box(std::mt19937_64& rng, int m, double lo_cap,
                          double hi_cap) {
  std::uniform_real_distribution<double> cap(lo_cap, hi_cap);
  std::uniform_int_distribution<int> coef(0, 2);
  std::bernoulli_distribution eq(0.5);
  MatrixXd ai = MatrixXd::Zero(m + 1, m);
  VectorXd bi(m + 1);
  VectorXd u(m);
  for (int i = 0; i < m; ++i) {
    ai(i, i) = 1;
    u(i) = std::floor(cap(rng));
    bi(i) = u(i);
  }
  VectorXd a(m);
  for (int i = 0; i < m; ++i) a(i) = coef(rng);
  if (a.sum() == 0) a(0) = 1;
  double full = a.dot(u);
  double rhs = std::floor(full * std::uniform_real_distribution<double>(0.4, 0.9)(rng));
  if (eq(rng)) {
    MatrixXd ae = a.transpose();
    VectorXd be(1);
    be << rhs;
    return maxgent::make_problem(m, ae, be, ai.topRows(m), bi.head(m));
  }
  ai.row(m) = a.transpose();
  bi(m) = rhs;
  return maxgent::make_problem(m, MatrixXd(0, m), VectorXd(0), ai, bi);
}

}  // namespace golden

#endif  // MAXGENT_TESTS_GOLDEN_HPP_
