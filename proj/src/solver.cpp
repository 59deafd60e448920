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

#include "maxgent/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>

#include "maxgent/entropy.hpp"

namespace maxgent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

VectorXd ls_solve(const MatrixXd& a, const VectorXd& b) {
  if (a.cols() == 0) return VectorXd(0);
  Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(a);
  return cod.solve(b);
}

MatrixXd take_rows(const MatrixXd& a, const std::vector<int>& rows) {
  MatrixXd out(rows.size(), a.cols());
  for (size_t k = 0; k < rows.size(); ++k) out.row(k) = a.row(rows[k]);
  return out;
}

VectorXd take(const VectorXd& v, const std::vector<int>& idx) {
  VectorXd out(idx.size());
  for (size_t k = 0; k < idx.size(); ++k) out(k) = v(idx[k]);
  return out;
}

}  // namespace

VectorXd nnls(const MatrixXd& e, const VectorXd& f, int n_free) {
  const int n = static_cast<int>(e.cols());
  std::vector<bool> passive(n, false);
  for (int i = 0; i < n_free; ++i) passive[i] = true;
  auto solve_passive = [&]() {
    std::vector<int> idx;
    for (int j = 0; j < n; ++j)
      if (passive[j]) idx.push_back(j);
    MatrixXd sub(e.rows(), idx.size());
    for (size_t k = 0; k < idx.size(); ++k) sub.col(k) = e.col(idx[k]);
    VectorXd y_sub = ls_solve(sub, f);
    VectorXd y = VectorXd::Zero(n);
    for (size_t k = 0; k < idx.size(); ++k) y(idx[k]) = y_sub(k);
    return y;
  };
  VectorXd z = solve_passive();
  const double tol =
      1e-12 * std::max(1.0, (e.transpose() * f).lpNorm<Eigen::Infinity>());
  const int cap = 3 * n + 10;
  for (int outer = 0; outer < cap; ++outer) {
    VectorXd w = e.transpose() * (f - e * z);
    int t = -1;
    double best = tol;
    for (int j = n_free; j < n; ++j) {
      if (!passive[j] && w(j) > best) {
        best = w(j);
        t = j;
      }
    }
    if (t < 0) break;
    passive[t] = true;
    for (int inner = 0; inner < cap; ++inner) {
      VectorXd y = solve_passive();
      double alpha = 1.0;
      bool ok = true;
      for (int j = n_free; j < n; ++j) {
        if (passive[j] && y(j) <= 0.0) {
          ok = false;
          double denom = z(j) - y(j);
          alpha = std::min(alpha, denom > 0.0 ? z(j) / denom : 0.0);
        }
      }
      if (ok) {
        z = y;
        break;
      }
      z += alpha * (y - z);
      for (int j = n_free; j < n; ++j) {
        if (passive[j] && z(j) <= 1e-15) {
          passive[j] = false;
          z(j) = 0.0;
        }
      }
    }
  }
  return z;
}

ReducedProblem eliminate_zeros(const Problem& p, double zero_tol) {
  ReducedProblem red;
  red.m_full = p.m;
  std::vector<double> maxima(p.m, 0.0);
  std::vector<VectorXd> verts(p.m);
  double top = 1.0;
  for (int i = 0; i < p.m; ++i) {
    VectorXd c = VectorXd::Zero(p.m);
    c(i) = 1.0;
    LpResult r = solve_lp(c, Sense::kMax, p);
    if (r.status == LpStatus::kInfeasible)
      fail(ErrorKind::kInfeasible, "constraints are infeasible");
    if (r.status == LpStatus::kUnbounded)
      fail(ErrorKind::kUnbounded,
           "problem admits arbitrarily large solutions");
    maxima[i] = r.objective;
    verts[i] = r.x;
    top = std::max(top, r.objective);
  }
  const double thr = zero_tol * top;
  for (int i = 0; i < p.m; ++i)
    if (maxima[i] > thr) red.kept.push_back(i);
  if (red.kept.empty())
    fail(ErrorKind::kInfeasible, "all variables forced to zero");
  const int mk = static_cast<int>(red.kept.size());

  auto restrict_cols = [&](const MatrixXd& a) {
    MatrixXd out(a.rows(), mk);
    for (int k = 0; k < mk; ++k) out.col(k) = a.col(red.kept[k]);
    return out;
  };
  MatrixXd ae = restrict_cols(p.a_eq), ai = restrict_cols(p.a_ineq);
  for (int r = 0; r < ae.rows(); ++r)
    if (ae.row(r).cwiseAbs().maxCoeff() > 0.0) red.eq_rows.push_back(r);
  for (int r = 0; r < ai.rows(); ++r)
    if (ai.row(r).cwiseAbs().maxCoeff() > 0.0) red.ineq_rows.push_back(r);

  Problem& q = red.problem;
  q.m = mk;
  q.a_eq = take_rows(ae, red.eq_rows);
  q.b_eq = take(p.b_eq, red.eq_rows);
  q.beta_eq = take(p.beta_eq, red.eq_rows);
  q.a_ineq = take_rows(ai, red.ineq_rows);
  q.b_ineq = take(p.b_ineq, red.ineq_rows);
  q.beta_ineq = take(p.beta_ineq, red.ineq_rows);
  q.beta_substitute = p.beta_substitute;

  for (int k = 0; k < mk; ++k) {
    const VectorXd& v = verts[red.kept[k]];
    VectorXd vk(mk);
    for (int j = 0; j < mk; ++j) vk(j) = v(red.kept[j]);
    red.vertices.push_back(vk);
  }
  return red;
}

Multipliers recover_multipliers(const Problem& p, const VectorXd& x,
                                double binding_tol) {
  for (Eigen::Index j = 0; j < x.size(); ++j)
    if (!(x(j) > 0.0))
      fail(ErrorKind::kDomain, "multipliers need a strictly positive point");
  Multipliers mu;
  for (int i = 0; i < p.n_ineq(); ++i) {
    double slack = p.b_ineq(i) - p.a_ineq.row(i).dot(x);
    if (slack <= binding_tol * (1.0 + std::abs(p.b_ineq(i))))
      mu.binding_rows.push_back(i);
  }
  const int ne = p.n_eq();
  const int nb = static_cast<int>(mu.binding_rows.size());
  MatrixXd m(ne + nb, p.m);
  if (ne > 0) m.topRows(ne) = p.a_eq;
  for (int k = 0; k < nb; ++k) m.row(ne + k) = p.a_ineq.row(mu.binding_rows[k]);
  VectorXd g = grad_G(x);
  VectorXd lam = nnls(m.transpose(), g, ne);
  mu.lambda_eq = lam.head(ne);
  mu.lambda_bind = lam.tail(nb);
  mu.residual = (m.transpose() * lam - g).lpNorm<Eigen::Infinity>();
  if (mu.residual > 1e-6 * (1.0 + g.lpNorm<Eigen::Infinity>()))
    fail(ErrorKind::kConvergence,
         "KKT inconsistency: stationarity residual " +
             std::to_string(mu.residual) + " with non-negative multipliers");
  return mu;
}

namespace {

// d . grad G(x + gamma d), with infinities at the orthant boundary.
double dir_deriv(const VectorXd& x, const VectorXd& d, double gamma) {
  VectorXd y = x + gamma * d;
  double s = y.sum();
  double r = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (d(i) == 0.0) continue;
    if (y(i) <= 1e-300) return d(i) < 0.0 ? -kInf : kInf;
    r += d(i) * std::log(s / y(i));
  }
  return r;
}

double line_search(const VectorXd& x, const VectorXd& d, double gmax) {
  if (dir_deriv(x, d, gmax) >= 0.0) return gmax;
  double lo = 0.0, hi = gmax;
  for (int k = 0; k < 200 && hi - lo > 1e-17 * gmax; ++k) {
    double mid = 0.5 * (lo + hi);
    if (dir_deriv(x, d, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

struct NewtonOut {
  bool ok = false;
  VectorXd x;
  VectorXd lambda;  // equalities then working rows
};

NewtonOut newton_kkt(const Problem& q, const std::vector<int>& work,
                     const VectorXd& x0) {
  const int m = q.m;
  const int ne = q.n_eq();
  const int k = ne + static_cast<int>(work.size());
  MatrixXd mat(k, m);
  VectorXd rhs(k);
  if (ne > 0) {
    mat.topRows(ne) = q.a_eq;
    rhs.head(ne) = q.b_eq;
  }
  for (size_t w = 0; w < work.size(); ++w) {
    mat.row(ne + w) = q.a_ineq.row(work[w]);
    rhs(ne + w) = q.b_ineq(work[w]);
  }
  const VectorXd row_scale =
      (1.0 + rhs.array().abs()).inverse().matrix();
  VectorXd x = x0;
  VectorXd lam = ls_solve(mat.transpose(), grad_G(x));
  auto residual = [&](const VectorXd& xx, const VectorXd& ll) {
    VectorXd f(m + k);
    f.head(m) = grad_G(xx) - mat.transpose() * ll;
    f.tail(k) = (mat * xx - rhs).cwiseProduct(row_scale);
    return f;
  };
  VectorXd f = residual(x, lam);
  double norm = f.lpNorm<Eigen::Infinity>();
  for (int it = 0; it < 100 && norm > 1e-13; ++it) {
    const double s = x.sum();
    MatrixXd jac = MatrixXd::Zero(m + k, m + k);
    jac.topLeftCorner(m, m).setConstant(1.0 / s);
    jac.topLeftCorner(m, m).diagonal() -= x.cwiseInverse();
    jac.topRightCorner(m, k) = -mat.transpose();
    jac.bottomLeftCorner(k, m) = row_scale.asDiagonal() * mat;
    Eigen::CompleteOrthogonalDecomposition<MatrixXd> cod(jac);
    VectorXd step = cod.solve(-f);
    VectorXd dx = step.head(m), dl = step.tail(k);
    double alpha = 1.0;
    for (int i = 0; i < m; ++i)
      if (dx(i) < 0.0) alpha = std::min(alpha, 0.9 * x(i) / -dx(i));
    bool moved = false;
    for (int bt = 0; bt < 40; ++bt) {
      VectorXd xn = x + alpha * dx;
      VectorXd ln = lam + alpha * dl;
      VectorXd fn = residual(xn, ln);
      double nn = fn.lpNorm<Eigen::Infinity>();
      if (nn < norm || (nn <= 1e-12 && nn <= 2.0 * norm)) {
        x = xn;
        lam = ln;
        f = fn;
        moved = nn < norm;
        norm = nn;
        break;
      }
      alpha *= 0.5;
    }
    if (!moved) break;
  }
  NewtonOut out;
  out.ok = norm <= 1e-10;
  out.x = x;
  out.lambda = lam;
  return out;
}

struct PolishOut {
  bool ok = false;
  VectorXd x;
};

PolishOut polish(const Problem& q, const VectorXd& x0) {
  std::vector<int> work;
  for (int i = 0; i < q.n_ineq(); ++i) {
    double slack = q.b_ineq(i) - q.a_ineq.row(i).dot(x0);
    if (slack <= 1e-4 * (1.0 + std::abs(q.b_ineq(i)))) work.push_back(i);
  }
  const int ne = q.n_eq();
  PolishOut out;
  for (int swap = 0; swap < 2 * q.n_ineq() + 10; ++swap) {
    NewtonOut nt = newton_kkt(q, work, x0);
    if (!nt.ok) return out;
    int worst = -1;
    double worst_v = 1e-10;
    for (int i = 0; i < q.n_ineq(); ++i) {
      if (std::find(work.begin(), work.end(), i) != work.end()) continue;
      double v = (q.a_ineq.row(i).dot(nt.x) - q.b_ineq(i)) /
                 (1.0 + std::abs(q.b_ineq(i)));
      if (v > worst_v) {
        worst_v = v;
        worst = i;
      }
    }
    if (worst >= 0) {
      work.push_back(worst);
      std::sort(work.begin(), work.end());
      continue;
    }
    int neg = -1;
    double neg_v = -1e-9;
    for (size_t w = 0; w < work.size(); ++w) {
      if (nt.lambda(ne + w) < neg_v) {
        neg_v = nt.lambda(ne + w);
        neg = static_cast<int>(w);
      }
    }
    if (neg >= 0) {
      // Degenerate sets admit several multiplier vectors; keep the row if
      // a non-negative one exists.
      std::vector<int> idx(work);
      MatrixXd m(ne + work.size(), q.m);
      if (ne > 0) m.topRows(ne) = q.a_eq;
      for (size_t w = 0; w < work.size(); ++w)
        m.row(ne + w) = q.a_ineq.row(work[w]);
      VectorXd g = grad_G(nt.x);
      VectorXd lam = nnls(m.transpose(), g, ne);
      if ((m.transpose() * lam - g).lpNorm<Eigen::Infinity>() > 1e-9) {
        work.erase(work.begin() + neg);
        continue;
      }
    }
    out.ok = true;
    out.x = nt.x;
    return out;
  }
  return out;
}

struct Vertex {
  VectorXd v;
  double w;
};

}  // namespace

VectorXd Solution::x_full() const {
  VectorXd x = VectorXd::Zero(reduced.m_full);
  for (size_t k = 0; k < reduced.kept.size(); ++k)
    x(reduced.kept[k]) = x_star(k);
  return x;
}

double lambda_star(const Solution& sol) {
  const Problem& q = sol.problem();
  double v = sol.lambda_eq.cwiseAbs().dot(q.beta_eq);
  for (size_t k = 0; k < sol.binding_rows.size(); ++k)
    v += sol.lambda_bind(k) * q.beta_ineq(sol.binding_rows[k]);
  return v;
}

namespace {

Solution finish(const Problem& q, ReducedProblem red, const VectorXd& x,
                const SolverOptions& opts, int iterations) {
  Solution sol;
  sol.reduced = std::move(red);
  sol.x_star = x;
  sol.s_star = x.sum();
  sol.chi_star = x / sol.s_star;
  sol.g_star = gen_entropy(x);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!(x(i) > opts.zero_tol * sol.s_star))
      fail(ErrorKind::kConvergence,
           "solution has a vanishing coordinate after zero elimination");
  Multipliers mu = recover_multipliers(q, x, opts.binding_tol);
  sol.lambda_eq = mu.lambda_eq;
  sol.lambda_bind = mu.lambda_bind;
  sol.binding_rows = mu.binding_rows;
  double primal = 0.0;
  for (int i = 0; i < q.n_eq(); ++i)
    primal = std::max(primal, std::abs(q.a_eq.row(i).dot(x) - q.b_eq(i)) /
                                  (1.0 + std::abs(q.b_eq(i))));
  for (int i = 0; i < q.n_ineq(); ++i)
    primal = std::max(primal, (q.a_ineq.row(i).dot(x) - q.b_ineq(i)) /
                                  (1.0 + std::abs(q.b_ineq(i))));
  sol.kkt_residual = std::max(mu.residual, primal);
  sol.lambda_star_bound = lambda_star(sol);
  sol.fw_iterations = iterations;
  return sol;
}

std::optional<Solution> try_polish(const Problem& q, const ReducedProblem& red,
                                   const VectorXd& x,
                                   const SolverOptions& opts, int it) {
  PolishOut po = polish(q, x);
  if (!po.ok) return std::nullopt;
  try {
    Solution sol = finish(q, red, po.x, opts, it);
    if (sol.kkt_residual <= opts.kkt_tol) return sol;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

Solution maximize_G(const Problem& p, const SolverOptions& opts) {
  sum_bounds(p);
  ReducedProblem red = eliminate_zeros(p, opts.zero_tol);
  const Problem q = red.problem;

  std::vector<Vertex> act;
  for (const VectorXd& v : red.vertices) {
    bool dup = false;
    for (Vertex& a : act) {
      if ((a.v - v).lpNorm<Eigen::Infinity>() <=
          1e-10 * (1.0 + v.lpNorm<Eigen::Infinity>())) {
        a.w += 1.0;
        dup = true;
        break;
      }
    }
    if (!dup) act.push_back({v, 1.0});
  }
  double total = 0.0;
  for (const Vertex& a : act) total += a.w;
  VectorXd x = VectorXd::Zero(q.m);
  for (Vertex& a : act) {
    a.w /= total;
    x += a.w * a.v;
  }

  double gap = kInf;
  int it = 0;
  for (; it < opts.max_fw_iterations; ++it) {
    if (opts.polish_every > 0 && it % opts.polish_every == 0) {
      if (auto sol = try_polish(q, red, x, opts, it)) return *sol;
    }
    VectorXd g = grad_G(x);
    LpResult lp = solve_lp(g, Sense::kMax, q);
    if (lp.status != LpStatus::kOptimal)
      fail(ErrorKind::kInternal, "linear oracle failed");
    const VectorXd& s = lp.x;
    gap = g.dot(s - x);
    if (gap <= opts.fw_gap_tol * std::max(1.0, gen_entropy(x))) break;
    int away = 0;
    for (size_t k = 1; k < act.size(); ++k)
      if (g.dot(act[k].v) < g.dot(act[away].v)) away = static_cast<int>(k);
    double gap_away = g.dot(x - act[away].v);
    if (gap >= gap_away || act.size() == 1) {
      VectorXd d = s - x;
      double gamma = line_search(x, d, 1.0);
      for (Vertex& a : act) a.w *= 1.0 - gamma;
      bool merged = false;
      for (Vertex& a : act) {
        if ((a.v - s).lpNorm<Eigen::Infinity>() <=
            1e-10 * (1.0 + s.lpNorm<Eigen::Infinity>())) {
          a.w += gamma;
          merged = true;
          break;
        }
      }
      if (!merged) act.push_back({s, gamma});
      x += gamma * d;
    } else {
      double wa = act[away].w;
      double gmax = wa / (1.0 - wa);
      VectorXd d = x - act[away].v;
      double gamma = line_search(x, d, gmax);
      for (Vertex& a : act) a.w *= 1.0 + gamma;
      act[away].w -= gamma;
      x += gamma * d;
    }
    act.erase(std::remove_if(act.begin(), act.end(),
                             [](const Vertex& a) { return a.w <= 1e-15; }),
              act.end());
  }
  if (opts.polish_every > 0)
    if (auto sol = try_polish(q, red, x, opts, it)) return *sol;
  double best = gen_entropy(x);
  Solution sol;
  try {
    sol = finish(q, red, x, opts, it);
  } catch (const Error&) {
    std::ostringstream msg;
    msg << "solver did not converge: G = " << best << ", gap = " << gap;
    fail(ErrorKind::kConvergence, msg.str());
  }
  if (sol.kkt_residual > opts.kkt_tol) {
    std::ostringstream msg;
    msg << "solver did not converge: G = " << best
        << ", KKT residual = " << sol.kkt_residual;
    fail(ErrorKind::kConvergence, msg.str());
  }
  return sol;
}

Solution scale_solution(const Solution& sol, double c) {
  if (!(c > 0.0)) fail(ErrorKind::kDomain, "scale factor must be positive");
  Solution out = sol;
  out.reduced.problem = scale_problem(sol.reduced.problem, c);
  for (VectorXd& v : out.reduced.vertices) v *= c;
  out.x_star *= c;
  out.s_star *= c;
  out.g_star *= c;
  out.lambda_star_bound *= c;
  return out;
}

ScalingReport verify_scaling(const Solution& sol, const Problem& p, double c,
                             const SolverOptions& opts) {
  Solution sc = maximize_G(scale_problem(p, c), opts);
  ScalingReport r;
  r.x_deviation = (sc.x_full() - c * sol.x_full()).lpNorm<Eigen::Infinity>() /
                  (c * sol.s_star);
  r.g_deviation = std::abs(sc.g_star - c * sol.g_star) / (c * sol.g_star);
  if (sc.lambda_eq.size() == sol.lambda_eq.size() &&
      sc.binding_rows == sol.binding_rows) {
    double d = 0.0;
    if (sol.lambda_eq.size() > 0)
      d = (sc.lambda_eq - sol.lambda_eq).lpNorm<Eigen::Infinity>();
    if (sol.lambda_bind.size() > 0)
      d = std::max(d, (sc.lambda_bind - sol.lambda_bind)
                          .lpNorm<Eigen::Infinity>());
    r.lambda_deviation = d;
  } else {
    r.lambda_deviation = kInf;
  }
  return r;
}

}  // namespace maxgent
