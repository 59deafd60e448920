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

#include "maxgent/entropy.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace maxgent {

namespace {

constexpr double kTiny = 1e-300;

void check_nonneg(const VectorXd& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x(i) >= 0.0))
      fail(ErrorKind::kDomain, "negative or NaN entry " + std::to_string(i));
}

void check_positive(const VectorXd& x) {
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x(i) > 0.0))
      fail(ErrorKind::kDomain, "entry " + std::to_string(i) + " is not > 0");
}

double xlogx(double v) { return v < kTiny ? 0.0 : v * std::log(v); }

}  // namespace

CountVector::CountVector(std::vector<std::int64_t> v) : nu(std::move(v)) {
  for (size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < 0)
      fail(ErrorKind::kDomain, "negative count at " + std::to_string(i));
    n_ += nu[i];
  }
}

VectorXd CountVector::as_real() const {
  VectorXd x(nu.size());
  for (size_t i = 0; i < nu.size(); ++i) x(i) = static_cast<double>(nu[i]);
  return x;
}

double ext_entropy(const VectorXd& x) {
  check_nonneg(x);
  double h = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) h -= xlogx(x(i));
  return h;
}

double gen_entropy(const VectorXd& x) {
  double h = ext_entropy(x);
  return h + xlogx(x.sum());
}

double gen_entropy(const CountVector& nu) { return gen_entropy(nu.as_real()); }

VectorXd grad_G(const VectorXd& x) {
  check_positive(x);
  double s = x.sum();
  VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) g(i) = std::log(s / x(i));
  return g;
}

double hessian_quadform(const VectorXd& x, const VectorXd& y) {
  check_positive(x);
  if (y.size() != x.size()) fail(ErrorKind::kStructure, "length mismatch");
  double sy = y.sum();
  return sy * sy / x.sum() - (y.array().square() / x.array()).sum();
}

BigInt realizations(const CountVector& nu) {
  if (nu.n() > kExactCountLimit)
    fail(ErrorKind::kDomain, "exact count limited to n <= " +
                                 std::to_string(kExactCountLimit));
  // Product of binomials C(running, k), each step exact.
  BigInt r = 1;
  std::int64_t running = 0;
  for (std::int64_t v : nu.nu) {
    for (std::int64_t k = 1; k <= v; ++k) {
      ++running;
      r *= running;
      r /= k;
    }
  }
  return r;
}

double log_realizations(const CountVector& nu) {
  double r = std::lgamma(static_cast<double>(nu.n()) + 1.0);
  for (std::int64_t v : nu.nu) r -= std::lgamma(static_cast<double>(v) + 1.0);
  return r;
}

double log_bigint(const BigInt& v) {
  if (v <= 0) return -std::numeric_limits<double>::infinity();
  unsigned msb = boost::multiprecision::msb(v);
  if (msb < 900) return std::log(v.convert_to<double>());
  // Leading 64 bits read one at a time.
  unsigned shift = msb - 63;
  double top = 0.0;
  for (unsigned k = 0; k < 64; ++k)
    top = 2.0 * top + (boost::multiprecision::bit_test(v, msb - k) ? 1.0 : 0.0);
  return std::log(top) + shift * std::numbers::ln2;
}

double log_stirling_factor(const CountVector& nu) {
  if (nu.n() == 0) fail(ErrorKind::kDomain, "all-zero count vector");
  int k = 0;
  double sum_log = 0.0;
  for (std::int64_t v : nu.nu) {
    if (v > 0) {
      ++k;
      sum_log += std::log(static_cast<double>(v));
    }
  }
  return 0.5 * std::log(static_cast<double>(nu.n())) -
         0.5 * (k - 1) * std::log(2.0 * std::numbers::pi) - 0.5 * sum_log;
}

double stirling_factor(const CountVector& nu) {
  return std::exp(log_stirling_factor(nu));
}

LogSandwich realization_sandwich(const CountVector& nu) {
  int k = 0;
  for (std::int64_t v : nu.nu) k += v > 0 ? 1 : 0;
  double base = log_stirling_factor(nu) + gen_entropy(nu);
  return {base - k / 12.0, base};
}

double entropy_drop_bound(const VectorXd& x, double zeta) {
  if (!(zeta > 0.0)) fail(ErrorKind::kDomain, "zeta must be > 0");
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x(i) > zeta))
      fail(ErrorKind::kPrecondition,
           "entry " + std::to_string(i) + " does not exceed zeta");
  const double m = static_cast<double>(x.size());
  const double s = x.sum();
  double lin = 0.0, quad = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    lin += std::log(s / x(i));
    quad += 1.0 / (x(i) - zeta);
  }
  quad -= m / (s / m - zeta);
  return gen_entropy(x) - lin * zeta - 0.5 * quad * zeta * zeta;
}

namespace {

void check_density(const VectorXd& p, const char* name) {
  check_nonneg(p);
  if (std::abs(p.sum() - 1.0) > 1e-12)
    fail(ErrorKind::kDomain, std::string(name) + " does not sum to 1");
}

}  // namespace

double divergence(const VectorXd& p, const VectorXd& q) {
  if (p.size() != q.size()) fail(ErrorKind::kStructure, "length mismatch");
  check_density(p, "p");
  check_density(q, "q");
  double d = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) < kTiny) continue;
    if (!(q(i) > 0.0))
      fail(ErrorKind::kDomain, "q vanishes where p is positive");
    d += p(i) * std::log(p(i) / q(i));
  }
  return std::max(d, 0.0);
}

double sequence_log_prob(const VectorXd& p, const CountVector& nu) {
  if (p.size() != nu.size()) fail(ErrorKind::kStructure, "length mismatch");
  check_density(p, "p");
  double r = 0.0;
  for (int i = 0; i < nu.size(); ++i) {
    if (nu.nu[i] == 0) continue;
    if (!(p(i) > 0.0))
      fail(ErrorKind::kDomain, "p vanishes where the count is positive");
    r += static_cast<double>(nu.nu[i]) * std::log(p(i));
  }
  return r;
}

}  // namespace maxgent
