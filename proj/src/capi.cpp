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

#include "maxgent/maxgent.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "maxgent/concentration.hpp"
#include "maxgent/discrete.hpp"
#include "maxgent/lp.hpp"
#include "maxgent/model.hpp"
#include "maxgent/oracle.hpp"
#include "maxgent/solver.hpp"

using namespace maxgent;

struct mg_problem {
  Problem p;
};

struct mg_solution {
  Solution sol;
  SumBounds bounds;
  double theta_inf = 0.0;
};

struct mg_enumeration {
  EnumerationResult en;
};

struct mg_soundness {
  SoundnessReport rep;
};

namespace {

thread_local std::string g_last_error;

mg_status to_status(ErrorKind k) {
  switch (k) {
    case ErrorKind::kDomain: return MG_ERR_DOMAIN;
    case ErrorKind::kStructure: return MG_ERR_STRUCTURE;
    case ErrorKind::kInfeasible: return MG_ERR_INFEASIBLE;
    case ErrorKind::kUnbounded: return MG_ERR_UNBOUNDED;
    case ErrorKind::kConvergence: return MG_ERR_CONVERGENCE;
    case ErrorKind::kPrecondition: return MG_ERR_PRECONDITION;
    case ErrorKind::kCondition: return MG_ERR_CONDITION;
    case ErrorKind::kBudget: return MG_ERR_BUDGET;
    case ErrorKind::kIo: return MG_ERR_IO;
    case ErrorKind::kInternal: return MG_ERR_INTERNAL;
  }
  return MG_ERR_INTERNAL;
}

mg_status set_error(mg_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
mg_status guarded(F&& f) {
  try {
    g_last_error.clear();
    return f();
  } catch (const Error& e) {
    return set_error(to_status(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MG_ERR_INTERNAL, e.what());
  }
}

mg_status null_arg(const char* what) {
  return set_error(MG_ERR_ARGUMENT, std::string("null argument: ") + what);
}

mg_status copy_string(const std::string& s, char* buf, size_t cap,
                      size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf || cap < s.size() + 1)
    return set_error(MG_ERR_BUFFER, "buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return MG_OK;
}

mg_status check_len(int len, int want) {
  if (len < want)
    return set_error(MG_ERR_ARGUMENT, "output length " + std::to_string(len) +
                                          " < " + std::to_string(want));
  return MG_OK;
}

Tolerances to_tol(const mg_tolerances& t) {
  Tolerances out;
  out.delta = t.delta;
  out.epsilon = t.epsilon;
  if (t.has_eta) out.eta = t.eta;
  if (t.has_theta) out.theta = t.theta;
  return out;
}

void fill(const DistanceThresholdReport& r, mg_distance_report* o) {
  o->c1 = r.c1;
  o->c2 = r.c2;
  o->c3 = r.c3;
  o->c_hat = r.c_hat;
  o->B_prime = r.B_prime;
  o->log_B_prime = r.log_B_prime;
  o->C3_dprime = r.C3_dprime;
  o->log_C3_dprime = r.log_C3_dprime;
  o->gamma_star = r.gamma_star;
  o->beta_star = r.beta_star;
  o->lambda_star = r.lambda_star;
  o->gamma_exact = r.gamma_exact ? 1 : 0;
  o->theta = r.theta;
  o->delta = r.delta;
  o->epsilon = r.epsilon;
  o->delta_condition_ok = r.delta_condition_ok ? 1 : 0;
  o->theta_min = r.theta_min;
}

void row_major(const double* a, int rows, int cols, MatrixXd& out) {
  out.resize(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      out(i, j) = a[static_cast<size_t>(i) * cols + j];
}

}  // namespace

extern "C" {

const char* mg_version(void) { return "1.0.0"; }

const char* mg_status_name(mg_status s) {
  switch (s) {
    case MG_OK: return "ok";
    case MG_ERR_DOMAIN: return "domain error";
    case MG_ERR_STRUCTURE: return "structure error";
    case MG_ERR_INFEASIBLE: return "infeasible";
    case MG_ERR_UNBOUNDED: return "unbounded";
    case MG_ERR_CONVERGENCE: return "convergence failure";
    case MG_ERR_PRECONDITION: return "precondition failed";
    case MG_ERR_CONDITION: return "condition violated";
    case MG_ERR_BUDGET: return "budget exceeded";
    case MG_ERR_IO: return "i/o error";
    case MG_ERR_INTERNAL: return "internal error";
    case MG_ERR_ARGUMENT: return "invalid argument";
    case MG_ERR_BUFFER: return "buffer too small";
  }
  return "unknown status";
}

const char* mg_last_error(void) { return g_last_error.c_str(); }

mg_status mg_problem_create(int m, int n_eq, const double* a_eq,
                            const double* b_eq, int n_ineq,
                            const double* a_ineq, const double* b_ineq,
                            double beta_substitute, mg_problem** out) {
  if (!out) return null_arg("out");
  if (m < 0 || n_eq < 0 || n_ineq < 0)
    return set_error(MG_ERR_ARGUMENT, "negative dimension");
  if ((n_eq > 0 && (!a_eq || !b_eq)) || (n_ineq > 0 && (!a_ineq || !b_ineq)))
    return null_arg("constraint data");
  return guarded([&] {
    MatrixXd ae, ai;
    row_major(a_eq, n_eq, m, ae);
    row_major(a_ineq, n_ineq, m, ai);
    VectorXd be = n_eq ? Eigen::Map<const VectorXd>(b_eq, n_eq) : VectorXd();
    VectorXd bi =
        n_ineq ? Eigen::Map<const VectorXd>(b_ineq, n_ineq) : VectorXd();
    *out = new mg_problem{make_problem(m, ae, be, ai, bi, beta_substitute)};
    return MG_OK;
  });
}

mg_status mg_problem_load(const char* path, mg_problem** out) {
  if (!path) return null_arg("path");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new mg_problem{load_problem(path)};
    return MG_OK;
  });
}

mg_status mg_problem_parse(const char* json, mg_problem** out) {
  if (!json) return null_arg("json");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new mg_problem{problem_from_json(json)};
    return MG_OK;
  });
}

mg_status mg_problem_save(const mg_problem* p, const char* path) {
  if (!p) return null_arg("problem");
  if (!path) return null_arg("path");
  return guarded([&] {
    save_problem(p->p, path);
    return MG_OK;
  });
}

mg_status mg_problem_to_json(const mg_problem* p, char* buf, size_t cap,
                             size_t* needed) {
  if (!p) return null_arg("problem");
  return guarded([&] { return copy_string(problem_to_json(p->p), buf, cap, needed); });
}

mg_status mg_problem_scale(const mg_problem* p, double c, mg_problem** out) {
  if (!p) return null_arg("problem");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new mg_problem{scale_problem(p->p, c)};
    return MG_OK;
  });
}

void mg_problem_free(mg_problem* p) { delete p; }

int mg_problem_dim(const mg_problem* p) { return p ? p->p.m : -1; }
int mg_problem_n_eq(const mg_problem* p) { return p ? p->p.n_eq() : -1; }
int mg_problem_n_ineq(const mg_problem* p) { return p ? p->p.n_ineq() : -1; }

mg_status mg_problem_b(const mg_problem* p, double* b_eq, double* b_ineq) {
  if (!p) return null_arg("problem");
  for (int i = 0; i < p->p.n_eq(); ++i)
    if (b_eq) b_eq[i] = p->p.b_eq(i);
  for (int i = 0; i < p->p.n_ineq(); ++i)
    if (b_ineq) b_ineq[i] = p->p.b_ineq(i);
  return MG_OK;
}

mg_status mg_problem_validate(const mg_problem* p, int* ok, char* buf,
                              size_t cap, size_t* needed) {
  if (!p) return null_arg("problem");
  return guarded([&] {
    ValidationReport r = validate_problem(p->p);
    if (ok) *ok = r.ok() ? 1 : 0;
    std::string joined;
    for (const auto& v : r.violations) {
      if (!joined.empty()) joined += '\n';
      joined += v;
    }
    if (!buf && !needed) return MG_OK;
    return copy_string(joined, buf, cap, needed);
  });
}

mg_status mg_problem_sum_bounds(const mg_problem* p, double* s1, double* s2) {
  if (!p) return null_arg("problem");
  return guarded([&] {
    SumBounds b = sum_bounds(p->p);
    if (s1) *s1 = b.s1;
    if (s2) *s2 = b.s2;
    return MG_OK;
  });
}

mg_status mg_problem_analytic_bounds(const mg_problem* p, int* has_s1_lower,
                                     double* s1_lower, int* has_s2_upper,
                                     double* s2_upper) {
  if (!p) return null_arg("problem");
  return guarded([&] {
    AnalyticSumBounds b = analytic_sum_bounds(p->p);
    if (has_s1_lower) *has_s1_lower = b.s1_lower.has_value();
    if (s1_lower) *s1_lower = b.s1_lower.value_or(0.0);
    if (has_s2_upper) *has_s2_upper = b.s2_upper.has_value();
    if (s2_upper) *s2_upper = b.s2_upper.value_or(0.0);
    return MG_OK;
  });
}

mg_status mg_problem_theta_inf(const mg_problem* p, double* out) {
  if (!p) return null_arg("problem");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = theta_infinity(p->p);
    return MG_OK;
  });
}

mg_status mg_min_delta(const mg_problem* p, const double* v, int len,
                       double* out) {
  if (!p) return null_arg("problem");
  if (!v || !out) return null_arg("vector");
  return guarded([&] {
    *out = min_delta(Eigen::Map<const VectorXd>(v, len), p->p);
    return MG_OK;
  });
}

mg_status mg_membership(const mg_problem* p, const double* v, int len,
                        double delta, int* out) {
  if (!p) return null_arg("problem");
  if (!v || !out) return null_arg("vector");
  return guarded([&] {
    *out = membership(Eigen::Map<const VectorXd>(v, len), p->p, delta) ? 1 : 0;
    return MG_OK;
  });
}

int64_t mg_ceil_sum(double s) {
  try {
    return ceil_sum(s);
  } catch (const Error& e) {
    set_error(to_status(e.kind()), e.what());
    return -1;
  }
}

mg_solver_options mg_solver_options_default(void) {
  SolverOptions d;
  mg_solver_options o;
  o.kkt_tol = d.kkt_tol;
  o.binding_tol = d.binding_tol;
  o.zero_tol = d.zero_tol;
  o.fw_gap_tol = d.fw_gap_tol;
  o.max_fw_iterations = d.max_fw_iterations;
  o.polish_every = d.polish_every;
  return o;
}

mg_status mg_solve(const mg_problem* p, const mg_solver_options* opts,
                   mg_solution** out) {
  if (!p) return null_arg("problem");
  if (!out) return null_arg("out");
  return guarded([&] {
    SolverOptions so;
    if (opts) {
      so.kkt_tol = opts->kkt_tol;
      so.binding_tol = opts->binding_tol;
      so.zero_tol = opts->zero_tol;
      so.fw_gap_tol = opts->fw_gap_tol;
      so.max_fw_iterations = opts->max_fw_iterations;
      so.polish_every = opts->polish_every;
    }
    auto h = std::make_unique<mg_solution>();
    h->bounds = sum_bounds(p->p);
    h->sol = maximize_G(p->p, so);
    h->theta_inf = theta_infinity(h->sol.problem());
    *out = h.release();
    return MG_OK;
  });
}

void mg_solution_free(mg_solution* s) { delete s; }

mg_status mg_solution_info_get(const mg_solution* s, mg_solution_info* out) {
  if (!s) return null_arg("solution");
  if (!out) return null_arg("out");
  return guarded([&] {
    const Solution& x = s->sol;
    out->m_full = x.reduced.m_full;
    out->m = x.m();
    out->n_eq = x.problem().n_eq();
    out->n_ineq = x.problem().n_ineq();
    out->n_binding = static_cast<int>(x.binding_rows.size());
    out->s_star = x.s_star;
    out->g_star = x.g_star;
    out->lambda_star = x.lambda_star_bound;
    out->kkt_residual = x.kkt_residual;
    out->fw_iterations = x.fw_iterations;
    out->s1 = s->bounds.s1;
    out->s2 = s->bounds.s2;
    out->theta_inf = s->theta_inf;
    IntegerRange r = integer_range(s->bounds, x.s_star);
    out->n1 = r.n1;
    out->n_star = r.n_star;
    out->n2 = r.n2;
    return MG_OK;
  });
}

mg_status mg_solution_x(const mg_solution* s, double* out, int len) {
  if (!s || !out) return null_arg("solution/out");
  if (auto st = check_len(len, s->sol.reduced.m_full)) return st;
  VectorXd x = s->sol.x_full();
  for (int i = 0; i < x.size(); ++i) out[i] = x(i);
  return MG_OK;
}

mg_status mg_solution_chi(const mg_solution* s, double* out, int len) {
  if (!s || !out) return null_arg("solution/out");
  if (auto st = check_len(len, s->sol.reduced.m_full)) return st;
  VectorXd x = s->sol.x_full() / s->sol.s_star;
  for (int i = 0; i < x.size(); ++i) out[i] = x(i);
  return MG_OK;
}

mg_status mg_solution_kept(const mg_solution* s, int* out, int len) {
  if (!s || !out) return null_arg("solution/out");
  if (auto st = check_len(len, s->sol.m())) return st;
  for (int i = 0; i < s->sol.m(); ++i) out[i] = s->sol.reduced.kept[i];
  return MG_OK;
}

mg_status mg_solution_eq_rows(const mg_solution* s, int* out, int len) {
  if (!s || (!out && len > 0)) return null_arg("solution/out");
  const auto& rows = s->sol.reduced.eq_rows;
  if (auto st = check_len(len, static_cast<int>(rows.size()))) return st;
  for (size_t i = 0; i < rows.size(); ++i) out[i] = rows[i];
  return MG_OK;
}

mg_status mg_solution_lambda_eq(const mg_solution* s, double* out, int len) {
  if (!s || (!out && len > 0)) return null_arg("solution/out");
  const VectorXd& l = s->sol.lambda_eq;
  if (auto st = check_len(len, static_cast<int>(l.size()))) return st;
  for (int i = 0; i < l.size(); ++i) out[i] = l(i);
  return MG_OK;
}

mg_status mg_solution_binding(const mg_solution* s, int* rows, double* lambda,
                              int len) {
  if (!s) return null_arg("solution");
  const auto& b = s->sol.binding_rows;
  if (auto st = check_len(len, static_cast<int>(b.size()))) return st;
  for (size_t i = 0; i < b.size(); ++i) {
    if (rows) rows[i] = s->sol.reduced.ineq_rows[b[i]];
    if (lambda) lambda[i] = s->sol.lambda_bind(static_cast<int>(i));
  }
  return MG_OK;
}

mg_status mg_solution_nu_star(const mg_solution* s, double c, int64_t* out,
                              int len) {
  if (!s || !out) return null_arg("solution/out");
  if (auto st = check_len(len, s->sol.reduced.m_full)) return st;
  return guarded([&] {
    if (!(c > 0.0) || !std::isfinite(c))
      fail(ErrorKind::kDomain, "scale factor must be positive");
    CountVector nu = optimal_count_vector(VectorXd(c * s->sol.x_star));
    for (int i = 0; i < s->sol.reduced.m_full; ++i) out[i] = 0;
    for (int i = 0; i < nu.size(); ++i) out[s->sol.reduced.kept[i]] = nu.nu[i];
    return MG_OK;
  });
}

mg_status mg_solution_reduced_problem(const mg_solution* s, mg_problem** out) {
  if (!s || !out) return null_arg("solution/out");
  return guarded([&] {
    *out = new mg_problem{s->sol.problem()};
    return MG_OK;
  });
}

mg_status mg_solution_scaling_check(const mg_solution* s, const mg_problem* p,
                                    double c, double* x_dev, double* g_dev,
                                    double* lambda_dev) {
  if (!s || !p) return null_arg("solution/problem");
  return guarded([&] {
    ScalingReport r = verify_scaling(s->sol, p->p, c);
    if (x_dev) *x_dev = r.x_deviation;
    if (g_dev) *g_dev = r.g_deviation;
    if (lambda_dev) *lambda_dev = r.lambda_deviation;
    return MG_OK;
  });
}

mg_status mg_threshold_entropy(const mg_solution* s, const mg_tolerances* tol,
                               mg_entropy_report* out) {
  if (!s || !tol || !out) return null_arg("solution/tolerances/out");
  return guarded([&] {
    EntropyThresholdReport r =
        threshold_entropy(s->sol, s->bounds, s->theta_inf, to_tol(*tol));
    out->c1 = r.c1;
    out->c2 = r.c2;
    out->c3 = r.c3;
    out->c_hat = r.c_hat;
    out->B = r.B;
    out->log_B = r.log_B;
    out->C0 = r.C0;
    out->C2 = r.C2;
    out->C3 = r.C3;
    out->C4 = r.C4;
    out->lower = r.lower;
    out->upper = r.upper;
    out->eta = r.eta;
    out->delta = r.delta;
    out->epsilon = r.epsilon;
    return MG_OK;
  });
}

mg_status mg_threshold_distance(const mg_solution* s, const mg_tolerances* tol,
                                mg_distance_report* out) {
  if (!s || !tol || !out) return null_arg("solution/tolerances/out");
  return guarded([&] {
    fill(threshold_distance(s->sol, s->bounds, s->theta_inf, to_tol(*tol)), out);
    return MG_OK;
  });
}

mg_status mg_threshold_auto_delta(const mg_solution* s, double epsilon,
                                  double theta, mg_auto_delta_report* out) {
  if (!s || !out) return null_arg("solution/out");
  return guarded([&] {
    AutoDeltaReport r =
        threshold_auto_delta(s->sol, s->bounds, s->theta_inf, epsilon, theta);
    out->delta0 = r.delta0;
    out->c_hat = r.c_hat;
    out->lower = r.lower;
    fill(r.at_delta0, &out->at_delta0);
    return MG_OK;
  });
}

mg_status mg_threshold_lower_bound_distance(const mg_solution* s, double theta,
                                            double* out) {
  if (!s || !out) return null_arg("solution/out");
  return guarded([&] {
    *out = threshold_lower_bound_distance(s->sol, s->theta_inf, theta);
    return MG_OK;
  });
}

mg_status mg_ratio_bound_entropy(const mg_solution* s, double eta,
                                 double* log_bound) {
  if (!s || !log_bound) return null_arg("solution/out");
  return guarded([&] {
    *log_bound = ratio_bound_entropy(s->sol, s->bounds, eta).log_bound;
    return MG_OK;
  });
}

mg_status mg_ratio_bound_distance(const mg_solution* s, double delta,
                                  double theta, double* log_bound,
                                  int* useful) {
  if (!s || !log_bound) return null_arg("solution/out");
  return guarded([&] {
    RatioBound r = ratio_bound_distance(s->sol, s->bounds, delta, theta);
    *log_bound = r.log_bound;
    if (useful) *useful = r.useful ? 1 : 0;
    return MG_OK;
  });
}

mg_status mg_gamma_star(const double* chi, int m, double* beta, double* gamma,
                        int* exact) {
  if (!chi) return null_arg("chi");
  return guarded([&] {
    GammaStar g = gamma_star_for(Eigen::Map<const VectorXd>(chi, m));
    if (beta) *beta = g.beta;
    if (gamma) *gamma = g.gamma;
    if (exact) *exact = g.exact ? 1 : 0;
    return MG_OK;
  });
}

mg_status mg_solve_exp_linear(double a, int m, double rhs, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = solve_exp_linear(a, m, rhs);
    return MG_OK;
  });
}

mg_status mg_enumerate(const mg_problem* p, double delta, int64_t n1,
                       int64_t n2, int64_t budget, mg_enumeration** out) {
  if (!p || !out) return null_arg("problem/out");
  return guarded([&] {
    IntegerRange r;
    r.n1 = n1;
    r.n2 = n2;
    *out = new mg_enumeration{enumerate_feasible(
        p->p, delta, r, budget > 0 ? budget : kDefaultNodeBudget)};
    return MG_OK;
  });
}

void mg_enumeration_free(mg_enumeration* e) { delete e; }

size_t mg_enumeration_count(const mg_enumeration* e) {
  return e ? e->en.count() : 0;
}

int mg_enumeration_dim(const mg_enumeration* e) {
  if (!e || e->en.vectors.empty()) return 0;
  return e->en.vectors.front().nu.size();
}

int64_t mg_enumeration_nodes(const mg_enumeration* e) {
  return e ? e->en.nodes : 0;
}

double mg_enumeration_total_log(const mg_enumeration* e) {
  return e ? e->en.total_log : std::numeric_limits<double>::quiet_NaN();
}

mg_status mg_enumeration_vector(const mg_enumeration* e, size_t idx,
                                int64_t* out, int len) {
  if (!e || !out) return null_arg("enumeration/out");
  if (idx >= e->en.count()) return set_error(MG_ERR_ARGUMENT, "index out of range");
  const auto& nu = e->en.vectors[idx].nu;
  if (auto st = check_len(len, nu.size())) return st;
  for (int i = 0; i < nu.size(); ++i) out[i] = nu.nu[i];
  return MG_OK;
}

mg_status mg_enumeration_realizations(const mg_enumeration* e, size_t idx,
                                      char* buf, size_t cap, size_t* needed) {
  if (!e) return null_arg("enumeration");
  if (idx >= e->en.count()) return set_error(MG_ERR_ARGUMENT, "index out of range");
  return copy_string(e->en.vectors[idx].count.str(), buf, cap, needed);
}

mg_status mg_enumeration_total(const mg_enumeration* e, char* buf, size_t cap,
                               size_t* needed) {
  if (!e) return null_arg("enumeration");
  return copy_string(e->en.total.str(), buf, cap, needed);
}

mg_status mg_enumeration_csv(const mg_enumeration* e, char* buf, size_t cap,
                             size_t* needed) {
  if (!e) return null_arg("enumeration");
  return guarded([&] {
    std::ostringstream os;
    write_enumeration_csv(e->en, os);
    return copy_string(os.str(), buf, cap, needed);
  });
}

mg_status mg_verify(const mg_solution* s, const mg_tolerances* grid,
                    size_t n_grid, int64_t budget, double bound_offset,
                    mg_soundness** out) {
  if (!s || !out) return null_arg("solution/out");
  if (n_grid > 0 && !grid) return null_arg("grid");
  return guarded([&] {
    std::vector<Tolerances> g;
    for (size_t i = 0; i < n_grid; ++i) g.push_back(to_tol(grid[i]));
    VerifyOptions o;
    if (budget > 0) o.budget = budget;
    o.bound_offset = bound_offset;
    *out = new mg_soundness{verify_soundness(s->sol, s->bounds, g, o)};
    return MG_OK;
  });
}

void mg_soundness_free(mg_soundness* r) { delete r; }

size_t mg_soundness_count(const mg_soundness* r) {
  return r ? r->rep.points.size() : 0;
}

int mg_soundness_violations(const mg_soundness* r) {
  return r ? r->rep.violations : -1;
}

int mg_soundness_skipped(const mg_soundness* r) {
  return r ? r->rep.skipped : -1;
}

mg_status mg_soundness_point_get(const mg_soundness* r, size_t idx,
                                 mg_soundness_point* out) {
  if (!r || !out) return null_arg("report/out");
  if (idx >= r->rep.points.size())
    return set_error(MG_ERR_ARGUMENT, "index out of range");
  const SoundnessPoint& p = r->rep.points[idx];
  out->kind = p.kind == BoundKind::kEntropy ? MG_BOUND_ENTROPY : MG_BOUND_DISTANCE;
  out->delta = p.delta;
  out->param = p.param;
  out->epsilon = p.epsilon;
  out->skipped = p.skipped ? 1 : 0;
  out->log_bound = p.log_bound;
  out->exact_log_ratio = p.exact_log_ratio;
  out->margin = p.margin;
  out->size_a = p.size_a;
  out->size_b = p.size_b;
  out->implication_checked = p.implication_checked ? 1 : 0;
  out->implication_ok = p.implication_ok ? 1 : 0;
  return MG_OK;
}

const char* mg_soundness_note(const mg_soundness* r, size_t idx) {
  if (!r || idx >= r->rep.points.size()) return "";
  return r->rep.points[idx].note.c_str();
}

}  // extern "C"
