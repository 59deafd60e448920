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

// Acceptance run: one PASS/FAIL line per criterion, with details.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "maxgent/concentration.hpp"
#include "maxgent/discrete.hpp"
#include "maxgent/entropy.hpp"
#include "maxgent/lp.hpp"
#include "maxgent/oracle.hpp"
#include "maxgent/solver.hpp"
#include "properties.hpp"

using namespace maxgent;

namespace {

using Ints = std::vector<std::int64_t>;

struct Check {
  bool ok = true;
  std::ostringstream log;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      log << "  miss: " << what << "\n";
    }
  }
  void near_rel(double got, double want, double rel, const std::string& what) {
    std::ostringstream s;
    s.precision(10);
    s << what << " got " << got << " want " << want << " (rel tol " << rel << ")";
    expect(std::abs(got - want) <= rel * std::abs(want), s.str());
  }
  void near_abs(double got, double want, double tol, const std::string& what) {
    std::ostringstream s;
    s.precision(10);
    s << what << " got " << got << " want " << want << " (abs tol " << tol << ")";
    expect(std::abs(got - want) <= tol, s.str());
  }
};

std::string fmt(const Ints& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream s;
  s << "runtime " << dt << " s exceeds " << limit_s << " s";
  c.expect(dt < limit_s, s.str());
  if (!c.ok) ++failures;
  std::printf("%s %d %s (%.3f s)\n", c.ok ? "PASS" : "FAIL", id, title, dt);
  std::fputs(c.log.str().c_str(), stdout);
  std::fflush(stdout);
}

Tolerances tol(double delta, double eps, double eta, double theta) {
  Tolerances t;
  t.delta = delta;
  t.epsilon = eps;
  if (eta > 0) t.eta = eta;
  if (theta > 0) t.theta = theta;
  return t;
}

void crit1(Check& c) {
  Problem p = golden::balls();
  Solution s = maximize_G(p);
  EnumerationResult en = enumerate_feasible(p, 0.0, integer_range(sum_bounds(p), s.s_star));
  const std::map<Ints, int> table = {
      {{0, 4, 0}, 1},   {{1, 3, 0}, 4},   {{2, 2, 0}, 6},   {{3, 1, 0}, 4},
      {{0, 4, 1}, 5},   {{1, 3, 1}, 20},  {{2, 2, 1}, 30},  {{3, 1, 1}, 20},
      {{4, 0, 1}, 5},   {{0, 4, 2}, 15},  {{1, 3, 2}, 60},  {{2, 2, 2}, 90},
      {{3, 1, 2}, 60},  {{4, 0, 2}, 15},  {{1, 3, 3}, 140}, {{2, 2, 3}, 210},
      {{3, 1, 3}, 140}, {{4, 0, 3}, 35},  {{2, 2, 4}, 420}, {{3, 1, 4}, 280},
      {{4, 0, 4}, 70},  {{3, 1, 5}, 504}, {{4, 0, 5}, 126}, {{4, 0, 6}, 210}};
  c.expect(en.count() == 24, "count vectors: got " + std::to_string(en.count()) + " want 24");
  std::map<Ints, BigInt> got;
  for (const auto& e : en.vectors) got[e.nu.nu] = e.count;
  for (const auto& [nu, n] : table) {
    auto it = got.find(nu);
    if (it == got.end())
      c.expect(false, "missing " + fmt(nu));
    else
      c.expect(it->second == n, fmt(nu) + " count " + it->second.str() + " want " +
                                    std::to_string(n));
  }
  for (const auto& [nu, n] : got)
    if (!table.count(nu)) c.expect(false, "extra " + fmt(nu) + " -> " + n.str());
}

void crit2(Check& c) {
  const double a = 4, b = 6;
  Solution s = maximize_G(golden::balls(a, b));
  double st = (a + b + std::sqrt(a * a + b * b)) / 2;
  c.near_abs(s.s_star, st, 1e-6, "s*");
  c.near_abs(s.x_star(0), st - b, 1e-6, "x1");
  c.near_abs(s.x_star(1), a + b - st, 1e-6, "x2");
  c.near_abs(s.x_star(2), st - a, 1e-6, "x3");
}

void crit3(Check& c) {
  Problem p = golden::network();
  Solution s = maximize_G(p);
  SumBounds sb = sum_bounds(p);
  c.expect(theta_infinity(p) == 2.9, "theta_inf exact 2.9");
  c.near_abs(sb.s1, 21.5, 0.0, "s1");
  c.near_abs(sb.s2, 37.5, 0.0, "s2");
  const double want[6] = {6.591, 5.326, 13.26, 1.120, 2.253, 2.789};
  const double dec[6] = {5e-4, 5e-4, 5e-3, 5e-4, 5e-4, 5e-4};
  for (int i = 0; i < 6; ++i)
    c.near_abs(s.x_star(i), want[i], dec[i], "x*_" + std::to_string(i + 1));
  c.near_abs(s.g_star, 47.53, 0.01, "G*");
  CountVector nu = optimal_count_vector(s);
  c.expect(nu.nu == Ints({7, 5, 14, 1, 2, 3}), "nu* " + fmt(nu.nu));
  c.near_abs(min_delta(round_vector(s.x_star), p), 0.172, 0.001, "min_delta([x*])");
}

void crit4(Check& c) {
  Problem p = golden::network();
  Solution s = maximize_G(p);
  SumBounds sb = sum_bounds(p);
  double th = theta_infinity(s.problem());
  struct Row {
    double eps, eta, c_hat;
    Ints nu;
  } rows[] = {{1e-9, 0.05, 34.48, {227, 184, 457, 39, 78, 96}},
              {1e-9, 0.02, 91.27, {602, 486, 1210, 102, 206, 255}},
              {1e-9, 0.01, 191.9, {1265, 1022, 2545, 215, 433, 535}},
              {1e-15, 0.05, 40.25, {266, 214, 534, 45, 91, 112}},
              {1e-15, 0.02, 106.8, {703, 569, 1416, 120, 241, 298}},
              {1e-15, 0.01, 222.9, {1469, 1187, 2955, 250, 502, 622}}};
  for (const Row& r : rows) {
    std::ostringstream tag;
    tag << "eps=" << r.eps << " eta=" << r.eta;
    EntropyThresholdReport rep = threshold_entropy(s, sb, th, tol(0.01, r.eps, r.eta, 0));
    c.near_rel(rep.c_hat, r.c_hat, 0.005, "c_hat " + tag.str());
    CountVector nu = optimal_count_vector(VectorXd(rep.c_hat * s.x_star));
    c.expect(nu.nu == r.nu, "nu* at computed c_hat " + tag.str() + ": " + fmt(nu.nu) +
                                " want " + fmt(r.nu));
    // Diagnostic only: the same rounding at the reference factor.
    CountVector pub = optimal_count_vector(VectorXd(r.c_hat * s.x_star));
    c.log << "  note: nu* at reference c_hat " << r.c_hat << ": " << fmt(pub.nu)
          << (pub.nu == r.nu ? " (matches table)" : " (differs from table)") << "\n";
  }
  ThresholdBounds b1 = threshold_bounds_entropy(s, sb, th, tol(0.01, 1e-9, 0.05, 0));
  c.near_rel(b1.lower, 34.48, 0.01, "bounds(0.01,1e-9,0.05).lower");
  c.near_rel(b1.upper, 41.87, 0.01, "bounds(0.01,1e-9,0.05).upper");
  ThresholdBounds b2 = threshold_bounds_entropy(s, sb, th, tol(0.05, 1e-9, 0.02, 0));
  c.near_rel(b2.lower, 62.8, 0.01, "bounds(0.05,1e-9,0.02).lower");
  c.near_rel(b2.upper, 116.2, 0.01, "bounds(0.05,1e-9,0.02).upper");
  Problem ps = scale_problem(p, 34.5);
  Solution ss = maximize_G(ps);
  ThresholdBounds b3 = threshold_bounds_entropy(ss, sum_bounds(ps), theta_infinity(ss.problem()),
                                                tol(0.01, 1e-9, 0.05, 0));
  c.near_rel(b3.lower, 1.0, 0.01, "prescaled lower");
  c.near_rel(b3.upper, 1.0, 0.01, "prescaled upper");
}

void crit5(Check& c) {
  Problem p = golden::network();
  Solution s = maximize_G(p);
  SumBounds sb = sum_bounds(p);
  double th = theta_infinity(s.problem());
  struct Spot {
    double delta, theta, eps, want;
  } spots[] = {{1e-3, 0.08, 1e-9, 862.7},  {1e-4, 0.08, 1e-9, 3448},
               {1e-5, 0.08, 1e-9, 34483},  {1e-5, 0.01, 1e-9, 60376},
               {1e-5, 0.008, 1e-9, 111472}, {1e-5, 0.008, 1e-15, 123967}};
  for (const Spot& r : spots) {
    std::ostringstream tag;
    tag << "distance delta=" << r.delta << " theta=" << r.theta << " eps=" << r.eps;
    c.near_rel(threshold_distance(s, sb, th, tol(r.delta, r.eps, 0, r.theta)).c_hat, r.want,
               0.01, tag.str());
  }
  struct Auto {
    double theta, e9, e15;
  } autos[] = {{0.08, 704.4, 793.4}, {0.07, 933.5, 1050}, {0.06, 1292, 1450},
               {0.05, 1896, 2124},   {0.04, 3032, 3387},  {0.03, 5548, 6178},
               {0.01, 55345, 60991}, {0.008, 88189, 97004}};
  for (const Auto& r : autos)
    for (auto [eps, want] : {std::pair{1e-9, r.e9}, std::pair{1e-15, r.e15}}) {
      std::ostringstream tag;
      tag << "auto-delta theta=" << r.theta << " eps=" << eps;
      c.near_rel(threshold_auto_delta(s, sb, th, eps, r.theta).c_hat, want, 0.01, tag.str());
    }
}

void crit6(Check& c) {
  Problem p = golden::cities();
  Solution s = maximize_G(p);
  SumBounds sb = sum_bounds(p);
  c.near_abs(sb.s1, 139, 1e-9, "s1");
  c.near_abs(sb.s2, 390, 1e-9, "s2");
  c.near_abs(s.s_star, 390, 1e-6, "s*");
  c.near_abs(s.g_star, 964.62, 0.5, "G*");
  c.near_abs(s.lambda_star_bound, s.g_star, 1e-6 * s.g_star, "Lambda* = G*");
  AutoDeltaReport a = threshold_auto_delta(s, sb, theta_infinity(s.problem()), 1e-15, 0.04);
  c.near_rel(a.delta0, 4.36e-5, 0.05, "delta0");
  c.near_rel(a.c_hat, 1166.45, 0.01, "c_hat");
  CountVector nu = optimal_count_vector(VectorXd(1167.0 * s.x_star));
  c.expect(nu.n() == 455130, "n* " + std::to_string(nu.n()));
  Ints want = {38900, 38900, 38900, 46681, 46680, 46680,
               32401, 30479, 30479, 36452, 34289, 34289};
  c.expect(nu.nu == want, "nu* " + fmt(nu.nu));
}

void crit7(Check& c) {
  std::mt19937_64 rng(2026);
  std::vector<Tolerances> grid;
  for (double d : {0.0, 0.05})
    for (double q : {0.1, 0.3, 0.5}) grid.push_back(tol(d, 1e-3, q, q));
  int problems = 0, points = 0, violations = 0, skipped = 0;
  for (int tries = 0; problems < 60 && tries < 2000; ++tries) {
    int m = 2 + tries % 3;
    Problem p = golden::random_box(rng, m, 3.0, 12.0);
    Solution s = maximize_G(p);
    if (s.m() < m || s.x_star.minCoeff() <= 1.0) continue;
    SumBounds sb = sum_bounds(p);
    if (ceil_sum(sb.s2) > 50) continue;
    SoundnessReport r = verify_soundness(s, sb, grid);
    ++problems;
    points += static_cast<int>(r.points.size());
    violations += r.violations;
    skipped += r.skipped;
  }
  std::ostringstream s;
  s << problems << " problems, " << points << " points";
  c.expect(problems >= 50, s.str());
  c.expect(violations == 0, std::to_string(violations) + " violations");
  c.expect(skipped == 0, std::to_string(skipped) + " points skipped");
}

void crit8(Check& c) {
  std::mt19937_64 rng(88);
  double g = props::gradient_check(rng, 100);
  c.expect(g <= 1e-6, "gradient rel err " + std::to_string(g));
  double h = props::hessian_max(rng, 10000);
  c.expect(h <= 1e-12, "hessian max " + std::to_string(h));
  double hom = props::homogeneity_check(rng, 10000);
  c.expect(hom <= 1e-10, "homogeneity " + std::to_string(hom));
  for (const Problem& p : {golden::balls(), golden::network(), golden::cities()}) {
    Solution s = maximize_G(p);
    for (double k : {0.1, 3.0, 34.5}) {
      ScalingReport r = verify_scaling(s, p, k);
      c.expect(r.x_deviation <= 1e-6 && r.g_deviation <= 1e-6 && r.lambda_deviation <= 1e-6,
               "scaling deviation at c=" + std::to_string(k));
    }
  }
  for (int m = 1; m <= 5; ++m) {
    props::Tally t = props::sandwich_exhaustive(m, 60);
    c.expect(t.violations == 0, "sandwich m=" + std::to_string(m) + ": " +
                                    std::to_string(t.violations) + " violations");
  }
  auto suite = [&](const char* name, const props::Tally& t) {
    c.expect(t.samples >= 10000 && t.violations == 0,
             std::string(name) + ": " + std::to_string(t.samples) + " samples, " +
                 std::to_string(t.violations) + " violations");
  };
  suite("close", props::close_fuzz(rng, 10000));
  auto ins = props::enumerable_instances();
  suite("far", props::le_far_suite(ins, 10000));
  suite("far2", props::le_far2_suite(ins, 10000));
  suite("norm implication", props::far_fuzz(rng, 10000));
}

void crit9(Check& c) {
  c.near_abs(solve_exp_linear(1.0, 1, std::log(10.0)), 3.577, 0.001, "root");
}

}  // namespace

int main() {
  run(1, "balls enumeration table", 1, crit1);
  run(2, "closed-form solution", 1, crit2);
  run(3, "network example", 5, crit3);
  run(4, "entropy thresholds", 10, crit4);
  run(5, "distance thresholds", 10, crit5);
  run(6, "four-city example", 30, crit6);
  run(7, "soundness property suite", 300, crit7);
  run(8, "calculus and structure properties", 300, crit8);
  run(9, "root finder", 1, crit9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures ? 1 : 0;
}
