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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "maxgent/maxgent.h"

namespace {

mg_problem* balls() {
  const double ae[] = {1, 1, 0};
  const double be[] = {4};
  const double ai[] = {0, 1, 1};
  const double bi[] = {6};
  mg_problem* p = nullptr;
  EXPECT_EQ(mg_problem_create(3, 1, ae, be, 1, ai, bi, 1.0, &p), MG_OK);
  return p;
}

template <class F>
std::string read_string(F f) {
  size_t need = 0;
  EXPECT_EQ(f(nullptr, 0, &need), MG_ERR_BUFFER);
  std::string s(need, '\0');
  EXPECT_EQ(f(s.data(), s.size(), &need), MG_OK);
  s.resize(need ? need - 1 : 0);
  return s;
}

}  // namespace

TEST(CApi, StatusNames) {
  EXPECT_STREQ(mg_status_name(MG_OK), "ok");
  EXPECT_STRNE(mg_status_name(MG_ERR_BUDGET), mg_status_name(MG_ERR_IO));
  EXPECT_NE(std::string(mg_version()), "");
}

TEST(CApi, ProblemRoundTrip) {
  mg_problem* p = balls();
  ASSERT_NE(p, nullptr);
  EXPECT_EQ(mg_problem_dim(p), 3);
  EXPECT_EQ(mg_problem_n_eq(p), 1);
  EXPECT_EQ(mg_problem_n_ineq(p), 1);
  std::string js = read_string([&](char* b, size_t c, size_t* n) {
    return mg_problem_to_json(p, b, c, n);
  });
  mg_problem* q = nullptr;
  ASSERT_EQ(mg_problem_parse(js.c_str(), &q), MG_OK);
  double be = 0, bi = 0;
  ASSERT_EQ(mg_problem_b(q, &be, &bi), MG_OK);
  EXPECT_EQ(be, 4);
  EXPECT_EQ(bi, 6);
  double s1, s2;
  ASSERT_EQ(mg_problem_sum_bounds(q, &s1, &s2), MG_OK);
  EXPECT_NEAR(s1, 4, 1e-9);
  EXPECT_NEAR(s2, 10, 1e-9);
  int ok = 0;
  std::string msg = read_string([&](char* b, size_t c, size_t* n) {
    return mg_problem_validate(q, &ok, b, c, n);
  });
  EXPECT_EQ(ok, 1);
  mg_problem_free(q);
  mg_problem_free(p);
}

TEST(CApi, Errors) {
  mg_problem* p = nullptr;
  EXPECT_EQ(mg_problem_parse("{\"m\": 2, \"equalities\": [", &p), MG_ERR_IO);
  EXPECT_EQ(p, nullptr);
  EXPECT_NE(std::string(mg_last_error()), "");
  EXPECT_EQ(mg_problem_load("/nonexistent/x.json", &p), MG_ERR_IO);
  EXPECT_EQ(mg_problem_create(0, 0, nullptr, nullptr, 0, nullptr, nullptr, 1.0, &p),
            MG_ERR_STRUCTURE);
  EXPECT_EQ(mg_problem_sum_bounds(nullptr, nullptr, nullptr), MG_ERR_ARGUMENT);
  EXPECT_EQ(mg_problem_dim(nullptr), -1);

  const double ae[] = {1, 1};
  const double be[] = {-1};
  ASSERT_EQ(mg_problem_create(2, 1, ae, be, 0, nullptr, nullptr, 1.0, &p), MG_OK);
  mg_solution* s = nullptr;
  EXPECT_EQ(mg_solve(p, nullptr, &s), MG_ERR_INFEASIBLE);
  EXPECT_EQ(s, nullptr);
  mg_problem_free(p);

  const double ai[] = {1, -1};
  const double bi[] = {1};
  ASSERT_EQ(mg_problem_create(2, 0, nullptr, nullptr, 1, ai, bi, 1.0, &p), MG_OK);
  EXPECT_EQ(mg_solve(p, nullptr, &s), MG_ERR_UNBOUNDED);
  mg_problem_free(p);
}

TEST(CApi, SolveAndThresholds) {
  mg_problem* p = balls();
  mg_solution* s = nullptr;
  mg_solver_options o = mg_solver_options_default();
  ASSERT_EQ(mg_solve(p, &o, &s), MG_OK);
  mg_solution_info info;
  ASSERT_EQ(mg_solution_info_get(s, &info), MG_OK);
  EXPECT_EQ(info.m_full, 3);
  EXPECT_NEAR(info.s_star, (10 + std::sqrt(52.0)) / 2, 1e-9);
  EXPECT_EQ(info.n1, 4);
  EXPECT_EQ(info.n2, 10);
  std::vector<double> x(3), chi(3);
  ASSERT_EQ(mg_solution_x(s, x.data(), 3), MG_OK);
  ASSERT_EQ(mg_solution_chi(s, chi.data(), 3), MG_OK);
  EXPECT_NEAR(x[0] + x[1], 4, 1e-8);
  EXPECT_NEAR(chi[0] + chi[1] + chi[2], 1, 1e-12);
  EXPECT_EQ(mg_solution_x(s, x.data(), 2), MG_ERR_ARGUMENT);
  std::vector<int64_t> nu(3);
  ASSERT_EQ(mg_solution_nu_star(s, 1.0, nu.data(), 3), MG_OK);
  EXPECT_EQ(nu, (std::vector<int64_t>{3, 1, 5}));

  mg_tolerances t{0.05, 1e-3, 1, 0.1, 0, 0};
  mg_entropy_report er;
  ASSERT_EQ(mg_threshold_entropy(s, &t, &er), MG_OK);
  EXPECT_GE(er.c_hat, er.lower);
  EXPECT_LE(er.lower, er.upper);
  mg_tolerances bad{0.05, -1.0, 1, 0.1, 0, 0};
  EXPECT_EQ(mg_threshold_entropy(s, &bad, &er), MG_ERR_DOMAIN);

  mg_auto_delta_report ar;
  ASSERT_EQ(mg_threshold_auto_delta(s, 1e-3, 0.3, &ar), MG_OK);
  EXPECT_GT(ar.delta0, 0);
  EXPECT_EQ(ar.at_delta0.delta, ar.delta0);
  EXPECT_EQ(mg_threshold_auto_delta(s, 1e-9, 1000.0, &ar), MG_ERR_CONDITION);

  double beta, gamma;
  int exact;
  const double c[] = {0.5, 0.25, 0.25};
  ASSERT_EQ(mg_gamma_star(c, 3, &beta, &gamma, &exact), MG_OK);
  EXPECT_EQ(exact, 1);
  EXPECT_DOUBLE_EQ(beta, 0.5);
  EXPECT_DOUBLE_EQ(gamma, 0.5);
  double root;
  ASSERT_EQ(mg_solve_exp_linear(1.0, 1, std::log(10.0), &root), MG_OK);
  EXPECT_NEAR(root, 3.577152, 1e-6);

  mg_solution_free(s);
  mg_problem_free(p);
}

TEST(CApi, EnumerateAndVerify) {
  mg_problem* p = balls();
  mg_enumeration* e = nullptr;
  ASSERT_EQ(mg_enumerate(p, 0.0, 4, 10, 0, &e), MG_OK);
  EXPECT_EQ(mg_enumeration_count(e), 25u);
  EXPECT_EQ(mg_enumeration_dim(e), 3);
  std::string total = read_string([&](char* b, size_t c, size_t* n) {
    return mg_enumeration_total(e, b, c, n);
  });
  EXPECT_EQ(total, "2471");
  std::string csv = read_string([&](char* b, size_t c, size_t* n) {
    return mg_enumeration_csv(e, b, c, n);
  });
  EXPECT_EQ(csv.substr(0, 5), "nu_1,");
  std::vector<int64_t> v(3);
  EXPECT_EQ(mg_enumeration_vector(e, 99, v.data(), 3), MG_ERR_ARGUMENT);
  mg_enumeration_free(e);
  EXPECT_EQ(mg_enumerate(p, 0.0, 4, 10, 3, &e), MG_ERR_BUDGET);

  mg_problem* big = nullptr;
  ASSERT_EQ(mg_problem_scale(p, 3.0, &big), MG_OK);
  mg_solution* s = nullptr;
  ASSERT_EQ(mg_solve(big, nullptr, &s), MG_OK);
  mg_tolerances grid[2] = {{0.0, 1e-3, 1, 0.2, 0, 0}, {0.05, 1e-3, 0, 0, 1, 0.3}};
  mg_soundness* r = nullptr;
  ASSERT_EQ(mg_verify(s, grid, 2, 0, 0.0, &r), MG_OK);
  EXPECT_EQ(mg_soundness_count(r), 2u);
  EXPECT_EQ(mg_soundness_violations(r), 0);
  mg_soundness_point pt;
  ASSERT_EQ(mg_soundness_point_get(r, 1, &pt), MG_OK);
  EXPECT_EQ(pt.kind, MG_BOUND_DISTANCE);
  EXPECT_GE(pt.margin, 0);
  mg_soundness_free(r);
  ASSERT_EQ(mg_verify(s, grid, 2, 0, 1e3, &r), MG_OK);
  EXPECT_EQ(mg_soundness_violations(r), 2);
  mg_soundness_free(r);
  mg_solution_free(s);
  mg_problem_free(big);
  mg_problem_free(p);
}

TEST(CApi, SaveLoad) {
  mg_problem* p = balls();
  std::string path = testing::TempDir() + "capi_balls.json";
  ASSERT_EQ(mg_problem_save(p, path.c_str()), MG_OK);
  mg_problem* q = nullptr;
  ASSERT_EQ(mg_problem_load(path.c_str(), &q), MG_OK);
  EXPECT_EQ(mg_problem_dim(q), 3);
  std::remove(path.c_str());
  mg_problem_free(q);
  mg_problem_free(p);
}
