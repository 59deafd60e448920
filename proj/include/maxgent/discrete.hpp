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

#ifndef MAXGENT_DISCRETE_HPP_
#define MAXGENT_DISCRETE_HPP_

#include <cstdint>

#include "maxgent/entropy.hpp"
#include "maxgent/lp.hpp"
#include "maxgent/solver.hpp"

namespace maxgent {

struct IntegerRange {
  std::int64_t n1 = 0;
  std::int64_t n2 = 0;
  std::int64_t n_star = 0;
};

// Ceiling that ignores a relative excess of 1e-9 above an integer.
std::int64_t ceil_sum(double s);

IntegerRange integer_range(const SumBounds& bounds, double s_star);

CountVector optimal_count_vector(const VectorXd& x_star);
CountVector optimal_count_vector(const Solution& sol);

// Coordinate-wise round half up.
VectorXd round_vector(const VectorXd& x);

bool membership(const VectorXd& v, const Problem& p, double delta);
double min_delta(const VectorXd& v, const Problem& p);

// Any [x] with x in C(0) lies in C(delta) for delta >= this value.
double rounding_delta(double theta_inf);

}  // namespace maxgent

#endif  // MAXGENT_DISCRETE_HPP_
