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

/* C interface to the maxgent library. Handles are opaque; every call that
 * can fail returns an mg_status and leaves a message in mg_last_error(). */
#ifndef MAXGENT_MAXGENT_H_
#define MAXGENT_MAXGENT_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MG_API __declspec(dllexport)
#else
#define MG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mg_status {
  MG_OK = 0,
  MG_ERR_DOMAIN = 1,
  MG_ERR_STRUCTURE = 2,
  MG_ERR_INFEASIBLE = 3,
  MG_ERR_UNBOUNDED = 4,
  MG_ERR_CONVERGENCE = 5,
  MG_ERR_PRECONDITION = 6,
  MG_ERR_CONDITION = 7,
  MG_ERR_BUDGET = 8,
  MG_ERR_IO = 9,
  MG_ERR_INTERNAL = 10,
  MG_ERR_ARGUMENT = 11, /* null handle, bad index or length */
  MG_ERR_BUFFER = 12    /* output buffer too small; see *needed */
} mg_status;

typedef struct mg_problem mg_problem;
typedef struct mg_solution mg_solution;
typedef struct mg_enumeration mg_enumeration;
typedef struct mg_soundness mg_soundness;

MG_API const char* mg_version(void);
MG_API const char* mg_status_name(mg_status s);
/* Message of the last failed call on this thread; "" if none. */
MG_API const char* mg_last_error(void);

/* ---- problems ---- */

/* Matrices are row-major. beta_substitute replaces zero right-hand sides
 * in the tolerance scale. */
MG_API mg_status mg_problem_create(int m, int n_eq, const double* a_eq,
                                   const double* b_eq, int n_ineq,
                                   const double* a_ineq, const double* b_ineq,
                                   double beta_substitute, mg_problem** out);
MG_API mg_status mg_problem_load(const char* path, mg_problem** out);
MG_API mg_status mg_problem_parse(const char* json, mg_problem** out);
MG_API mg_status mg_problem_save(const mg_problem* p, const char* path);
MG_API mg_status mg_problem_to_json(const mg_problem* p, char* buf,
                                    size_t cap, size_t* needed);
MG_API mg_status mg_problem_scale(const mg_problem* p, double c,
                                  mg_problem** out);
MG_API void mg_problem_free(mg_problem* p);

MG_API int mg_problem_dim(const mg_problem* p);
MG_API int mg_problem_n_eq(const mg_problem* p);
MG_API int mg_problem_n_ineq(const mg_problem* p);
MG_API mg_status mg_problem_b(const mg_problem* p, double* b_eq,
                              double* b_ineq);

/* Violations joined by newlines; *ok is 1 when there are none. */
MG_API mg_status mg_problem_validate(const mg_problem* p, int* ok, char* buf,
                                     size_t cap, size_t* needed);
MG_API mg_status mg_problem_sum_bounds(const mg_problem* p, double* s1,
                                       double* s2);
MG_API mg_status mg_problem_analytic_bounds(const mg_problem* p,
                                            int* has_s1_lower,
                                            double* s1_lower,
                                            int* has_s2_upper,
                                            double* s2_upper);
/* +inf when the problem has no constraints. */
MG_API mg_status mg_problem_theta_inf(const mg_problem* p, double* out);

MG_API mg_status mg_min_delta(const mg_problem* p, const double* v, int len,
                              double* out);
MG_API mg_status mg_membership(const mg_problem* p, const double* v, int len,
                               double delta, int* out);
MG_API int64_t mg_ceil_sum(double s);

/* ---- solving ---- */

typedef struct mg_solver_options {
  double kkt_tol;
  double binding_tol;
  double zero_tol;
  double fw_gap_tol;
  int max_fw_iterations;
  int polish_every;
} mg_solver_options;

MG_API mg_solver_options mg_solver_options_default(void);

typedef struct mg_solution_info {
  int m_full;
  int m; /* coordinates not forced to zero */
  int n_eq;
  int n_ineq;
  int n_binding;
  double s_star;
  double g_star;
  double lambda_star;
  double kkt_residual;
  int fw_iterations;
  double s1;
  double s2;
  double theta_inf; /* of the reduced problem */
  int64_t n1;
  int64_t n_star;
  int64_t n2;
} mg_solution_info;

MG_API mg_status mg_solve(const mg_problem* p, const mg_solver_options* opts,
                          mg_solution** out);
MG_API void mg_solution_free(mg_solution* s);
MG_API mg_status mg_solution_info_get(const mg_solution* s,
                                      mg_solution_info* out);
/* Full-length arrays (m_full). */
MG_API mg_status mg_solution_x(const mg_solution* s, double* out, int len);
MG_API mg_status mg_solution_chi(const mg_solution* s, double* out, int len);
/* Original indices: kept coordinates (m), reduced equality rows (n_eq). */
MG_API mg_status mg_solution_kept(const mg_solution* s, int* out, int len);
MG_API mg_status mg_solution_eq_rows(const mg_solution* s, int* out, int len);
MG_API mg_status mg_solution_lambda_eq(const mg_solution* s, double* out,
                                       int len);
/* Binding inequality rows as original indices, with their multipliers. */
MG_API mg_status mg_solution_binding(const mg_solution* s, int* rows,
                                     double* lambda, int len);
/* nu* of the problem scaled by c, full length. */
MG_API mg_status mg_solution_nu_star(const mg_solution* s, double c,
                                     int64_t* out, int len);
MG_API mg_status mg_solution_reduced_problem(const mg_solution* s,
                                             mg_problem** out);
MG_API mg_status mg_solution_scaling_check(const mg_solution* s,
                                           const mg_problem* p, double c,
                                           double* x_dev, double* g_dev,
                                           double* lambda_dev);

/* ---- thresholds ---- */

typedef struct mg_tolerances {
  double delta;
  double epsilon;
  int has_eta;
  double eta;
  int has_theta;
  double theta;
} mg_tolerances;

typedef struct mg_entropy_report {
  double c1, c2, c3, c_hat;
  double B, log_B;
  double C0, C2, C3, C4;
  double lower, upper;
  double eta, delta, epsilon;
} mg_entropy_report;

typedef struct mg_distance_report {
  double c1, c2, c3, c_hat;
  double B_prime, log_B_prime;
  double C3_dprime, log_C3_dprime;
  double gamma_star, beta_star, lambda_star;
  int gamma_exact;
  double theta, delta, epsilon;
  int delta_condition_ok;
  double theta_min;
} mg_distance_report;

typedef struct mg_auto_delta_report {
  double delta0;
  double c_hat;
  double lower;
  mg_distance_report at_delta0;
} mg_auto_delta_report;

MG_API mg_status mg_threshold_entropy(const mg_solution* s,
                                      const mg_tolerances* tol,
                                      mg_entropy_report* out);
MG_API mg_status mg_threshold_distance(const mg_solution* s,
                                       const mg_tolerances* tol,
                                       mg_distance_report* out);
MG_API mg_status mg_threshold_auto_delta(const mg_solution* s,
                                         double epsilon, double theta,
                                         mg_auto_delta_report* out);
MG_API mg_status mg_threshold_lower_bound_distance(const mg_solution* s,
                                                   double theta, double* out);
MG_API mg_status mg_ratio_bound_entropy(const mg_solution* s, double eta,
                                        double* log_bound);
MG_API mg_status mg_ratio_bound_distance(const mg_solution* s, double delta,
                                         double theta, double* log_bound,
                                         int* useful);
MG_API mg_status mg_gamma_star(const double* chi, int m, double* beta,
                               double* gamma, int* exact);
MG_API mg_status mg_solve_exp_linear(double a, int m, double rhs,
                                     double* out);

/* ---- enumeration oracle ---- */

/* budget <= 0 selects the default node budget. */

MG_API mg_status mg_enumerate(const mg_problem* p, double delta, int64_t n1,
                              int64_t n2, int64_t budget,
                              mg_enumeration** out);
MG_API void mg_enumeration_free(mg_enumeration* e);
MG_API size_t mg_enumeration_count(const mg_enumeration* e);
MG_API int mg_enumeration_dim(const mg_enumeration* e);
MG_API int64_t mg_enumeration_nodes(const mg_enumeration* e);
MG_API double mg_enumeration_total_log(const mg_enumeration* e);
MG_API mg_status mg_enumeration_vector(const mg_enumeration* e, size_t idx,
                                       int64_t* out, int len);
/* Exact decimal strings. */
MG_API mg_status mg_enumeration_realizations(const mg_enumeration* e,
                                             size_t idx, char* buf,
                                             size_t cap, size_t* needed);
MG_API mg_status mg_enumeration_total(const mg_enumeration* e, char* buf,
                                      size_t cap, size_t* needed);
MG_API mg_status mg_enumeration_csv(const mg_enumeration* e, char* buf,
                                    size_t cap, size_t* needed);

/* ---- soundness check ---- */

typedef enum mg_bound_kind { MG_BOUND_ENTROPY = 0, MG_BOUND_DISTANCE = 1 } mg_bound_kind;

typedef struct mg_soundness_point {
  mg_bound_kind kind;
  double delta;
  double param; /* eta or theta */
  double epsilon;
  int skipped;
  double log_bound;
  double exact_log_ratio;
  double margin;
  size_t size_a;
  size_t size_b;
  int implication_checked;
  int implication_ok;
} mg_soundness_point;

/* bound_offset is added to every bound (negative-test hook; use 0). */
MG_API mg_status mg_verify(const mg_solution* s, const mg_tolerances* grid,
                           size_t n_grid, int64_t budget, double bound_offset,
                           mg_soundness** out);
MG_API void mg_soundness_free(mg_soundness* r);
MG_API size_t mg_soundness_count(const mg_soundness* r);
MG_API int mg_soundness_violations(const mg_soundness* r);
MG_API int mg_soundness_skipped(const mg_soundness* r);
MG_API mg_status mg_soundness_point_get(const mg_soundness* r, size_t idx,
                                        mg_soundness_point* out);
MG_API const char* mg_soundness_note(const mg_soundness* r, size_t idx);

#ifdef __cplusplus
}
#endif

#endif /* MAXGENT_MAXGENT_H_ */
