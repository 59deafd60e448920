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

// Randomized property checks shared by unit tests and the acceptance run.
#ifndef MAXGENT_TESTS_PROPERTIES_HPP_
#define MAXGENT_TESTS_PROPERTIES_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "golden.hpp"
#include "maxgent/concentration.hpp"
#include "maxgent/discrete.hpp"
#include "maxgent/entropy.hpp"
#include "maxgent/lp.hpp"
#include "maxgent/oracle.hpp"
#include "maxgent/solver.hpp"

namespace props {

using namespace maxgent;

struct Tally {
  std::int64_t samples = 0;
  std::int64_t violations = 0;
  void add(bool ok) {
    ++samples;
    if (!ok) ++violations;
  }
};

inline VectorXd random_positive(std::mt19937_64& rng, int m, double lo,
                                double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  VectorXd x(m);
  for (int i = 0; i < m; ++i) x(i) = u(rng);
  return x;
}

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

// Central differences; returns the worst relative error.
inline double gradient_check(std::mt19937_64& rng, int points) {
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    int m = 2 + k % 5;
    VectorXd x = random_positive(rng, m, 0.5, 20.0);
    VectorXd g = grad_G(x);
    for (int i = 0; i < m; ++i) {
      double h = 1e-5 * x(i);
      VectorXd xp = x, xm = x;
      xp(i) += h;
      xm(i) -= h;
      double fd = (gen_entropy(xp) - gen_entropy(xm)) / (2.0 * h);
      worst = std::max(worst, rel_err(fd, g(i)));
    }
  }
  return worst;
}

// Largest value of the Hessian quadratic form seen (should be <= 0).
inline double hessian_max(std::mt19937_64& rng, int points) {
  double worst = -std::numeric_limits<double>::infinity();
  std::normal_distribution<double> n;
  for (int k = 0; k < points; ++k) {
    int m = 2 + k % 6;
    VectorXd x = random_positive(rng, m, 0.01, 50.0);
    VectorXd y(m);
    for (int i = 0; i < m; ++i) y(i) = n(rng);
    if (k % 7 == 0) y = x * n(rng);  // direction of x: form is zero
    double scale = 1.0 + (y.array().square() / x.array()).sum();
    worst = std::max(worst, hessian_quadform(x, y) / scale);
  }
  return worst;
}

inline double homogeneity_check(std::mt19937_64& rng, int points) {
  double worst = 0.0;
  std::uniform_real_distribution<double> c(0.01, 100.0);
  for (int k = 0; k < points; ++k) {
    VectorXd x = random_positive(rng, 2 + k % 6, 0.0, 30.0);
    if (k % 5 == 0) x(0) = 0.0;
    double cc = c(rng);
    worst = std::max(worst, rel_err(gen_entropy(VectorXd(cc * x)),
                                    cc * gen_entropy(x)));
  }
  return worst;
}

inline Tally close_fuzz(std::mt19937_64& rng, int samples) {
  Tally t;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  while (t.samples < samples) {
    int m = 2 + static_cast<int>(t.samples % 5);
    double zeta = 0.05 + 2.0 * u01(rng);
    VectorXd x = random_positive(rng, m, zeta * 1.05, zeta + 30.0);
    double bound = entropy_drop_bound(x, zeta);
    for (int rep = 0; rep < 10; ++rep) {
      VectorXd y(m);
      for (int i = 0; i < m; ++i) {
        double v = x(i) + zeta * (2.0 * u01(rng) - 1.0);
        if (rep < 3) v = x(i) + (u01(rng) < 0.5 ? -zeta : zeta);  // corners
        y(i) = std::max(0.0, v);
      }
      double gy = gen_entropy(y);
      t.add(bound <= gy + 1e-10 * (1.0 + std::abs(gy)));
    }
  }
  return t;
}

// Implication for one norm; p = 1, 2 or 0 for the max norm.
inline Tally far_fuzz(std::mt19937_64& rng, int samples) {
  Tally t;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto norm = [](const VectorXd& v, int p) {
    return p == 1 ? v.lpNorm<1>() : p == 2 ? v.norm() : v.lpNorm<Eigen::Infinity>();
  };
  std::int64_t tries = 0;
  while (t.samples < samples && tries < 100LL * samples) {
    ++tries;
    int m = 2 + static_cast<int>(tries % 5);
    VectorXd x = random_positive(rng, m, 0.0, 10.0);
    VectorXd y = random_positive(rng, m, 0.0, 10.0);
    double theta = 0.01 + 3.0 * u01(rng);
    int p = static_cast<int>(tries % 3);
    double nx = norm(x, p), ny = norm(y, p);
    if (nx == 0.0 || ny == 0.0) continue;
    if (!(norm(x - y, p) > std::abs(nx - ny) + theta)) continue;
    double lhs = norm(VectorXd(x / nx - y / ny), p);
    t.add(lhs > theta / std::min(nx, ny) * (1.0 - 1e-12));
  }
  return t;
}

struct Instance {
  Problem problem;  // reduced problem of sol
  Solution sol;
  SumBounds bounds;
};

inline Instance instance(const Problem& p) {
  Instance in{p, maximize_G(p), sum_bounds(p)};
  in.problem = in.sol.problem();
  return in;
}

// Problems small enough to enumerate at several deltas.
inline std::vector<Instance> enumerable_instances() {
  std::vector<Instance> out;
  for (double c : {1.0, 3.0, 5.0})
    out.push_back(instance(scale_problem(golden::balls(), c)));
  out.push_back(instance(golden::balls(2.0, 9.0)));
  out.push_back(instance(golden::network()));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 6; ++k) {
    Problem p = golden::random_box(rng, 2 + k % 3, 3.0, 9.0);
    try {
      out.push_back(instance(p));
    } catch (const Error&) {
    }
  }
  return out;
}

// G(nu) <= G* + Lambda* delta - n D(f || chi*) over enumerated C(delta).
inline Tally le_far_suite(const std::vector<Instance>& ins, std::int64_t want) {
  Tally t;
  for (int pass = 0; t.samples < want && pass < 4; ++pass)
    for (const Instance& in : ins)
      for (double delta : {0.0, 0.02, 0.05, 0.1, 0.2}) {
        const double d = delta * (1 + pass);
        IntegerRange r = integer_range(in.bounds, in.sol.s_star);
        EnumerationResult en = enumerate_feasible(in.problem, d, r);
        for (const auto& e : en.vectors) {
          const double n = static_cast<double>(e.nu.n());
          if (n == 0) continue;
          VectorXd f = e.nu.as_real() / n;
          double rhs = in.sol.g_star + in.sol.lambda_star_bound * d -
                       n * divergence(f, in.sol.chi_star);
          double g = gen_entropy(e.nu);
          t.add(g <= rhs + 1e-9 * (1.0 + std::abs(rhs)));
        }
      }
  return t;
}

// Far vectors satisfy G(nu) <= G* + Lambda* delta - gamma* theta^2 n.
inline Tally le_far2_suite(const std::vector<Instance>& ins, std::int64_t want) {
  Tally t;
  for (int pass = 0; t.samples < want && pass < 4; ++pass)
    for (const Instance& in : ins) {
      GammaStar gs = gamma_star_for(in.sol.chi_star);
      for (double delta : {0.0, 0.05, 0.1}) {
        const double d = delta * (1 + pass);
        IntegerRange r = integer_range(in.bounds, in.sol.s_star);
        EnumerationResult en = enumerate_feasible(in.problem, d, r);
        for (double theta : {0.02, 0.05, 0.1, 0.2, 0.4}) {
          for (const auto& e : en.vectors) {
            const double n = static_cast<double>(e.nu.n());
            double dist = (e.nu.as_real() - in.sol.x_star).lpNorm<1>();
            if (!(dist > std::abs(n - in.sol.s_star) +
                             std::min(n, in.sol.s_star) * theta))
              continue;
            double rhs = in.sol.g_star + in.sol.lambda_star_bound * d -
                         gs.gamma * theta * theta * n;
            double g = n > 0 ? gen_entropy(e.nu) : 0.0;
            t.add(g <= rhs + 1e-9 * (1.0 + std::abs(rhs)));
          }
        }
      }
    }
  return t;
}

// Sandwich over every nu with m parts and sum n <= n_max.
inline Tally sandwich_exhaustive(int m, int n_max) {
  std::vector<double> lf(n_max + 1, 0.0);
  BigInt f = 1;
  for (int k = 1; k <= n_max; ++k) {
    f *= k;
    lf[k] = log_bigint(f);
  }
  Tally t;
  std::vector<std::int64_t> nu(m, 0);
  auto visit = [&](auto&& self, int i, int left) -> void {
    if (i == m - 1) {
      for (int v = 0; v <= left; ++v) {
        nu[i] = v;
        std::int64_t n = 0;
        for (auto a : nu) n += a;
        if (n == 0) continue;
        double exact = lf[n];
        for (auto a : nu) exact -= lf[a];
        LogSandwich s = realization_sandwich(CountVector(nu));
        double tol = 1e-12 * (1.0 + exact);
        t.add(s.lower <= exact + tol && exact <= s.upper + tol);
      }
      return;
    }
    for (int v = 0; v <= left; ++v) {
      nu[i] = v;
      self(self, i + 1, left - v);
    }
    nu[i] = 0;
  };
  visit(visit, 0, n_max);
  return t;
}

}  // namespace props

#endif  // MAXGENT_TESTS_PROPERTIES_HPP_
