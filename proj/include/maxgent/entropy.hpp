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

#ifndef MAXGENT_ENTROPY_HPP_
#define MAXGENT_ENTROPY_HPP_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "maxgent/model.hpp"

namespace maxgent {

using BigInt = boost::multiprecision::cpp_int;

struct CountVector {
  std::vector<std::int64_t> nu;

  CountVector() = default;
  explicit CountVector(std::vector<std::int64_t> v);
  std::int64_t n() const { return n_; }
  int size() const { return static_cast<int>(nu.size()); }
  VectorXd as_real() const;

 private:
  std::int64_t n_ = 0;
};

// Exact counts are offered up to this sum; beyond it only logs.
inline constexpr std::int64_t kExactCountLimit = 10000;

double gen_entropy(const VectorXd& x);
double gen_entropy(const CountVector& nu);
double ext_entropy(const VectorXd& x);
VectorXd grad_G(const VectorXd& x);
double hessian_quadform(const VectorXd& x, const VectorXd& y);

BigInt realizations(const CountVector& nu);
double log_realizations(const CountVector& nu);
double log_bigint(const BigInt& v);

double stirling_factor(const CountVector& nu);
double log_stirling_factor(const CountVector& nu);

struct LogSandwich {
  double lower = 0.0;
  double upper = 0.0;
};

LogSandwich realization_sandwich(const CountVector& nu);

// Lower bound on G over the max-norm cube of radius zeta around x.
double entropy_drop_bound(const VectorXd& x, double zeta);

double divergence(const VectorXd& p, const VectorXd& q);
double sequence_log_prob(const VectorXd& p, const CountVector& nu);

}  // namespace maxgent

#endif  // MAXGENT_ENTROPY_HPP_
