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

#include "maxgent/model.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maxgent/lp.hpp"

namespace maxgent {

namespace {

void check_dims(int m, const MatrixXd& a_eq, const VectorXd& b_eq,
                const MatrixXd& a_ineq, const VectorXd& b_ineq) {
  if (m <= 0) fail(ErrorKind::kStructure, "dimension m must be positive");
  if (a_eq.rows() != b_eq.size())
    fail(ErrorKind::kStructure,
         "equality row " + std::to_string(std::min(a_eq.rows(), b_eq.size())) +
             ": matrix has " + std::to_string(a_eq.rows()) + " rows, rhs has " +
             std::to_string(b_eq.size()));
  if (a_ineq.rows() != b_ineq.size())
    fail(ErrorKind::kStructure,
         "inequality row " +
             std::to_string(std::min(a_ineq.rows(), b_ineq.size())) +
             ": matrix has " + std::to_string(a_ineq.rows()) +
             " rows, rhs has " + std::to_string(b_ineq.size()));
  if (a_eq.rows() > 0 && a_eq.cols() != m)
    fail(ErrorKind::kStructure, "equality row 0: expected " +
                                    std::to_string(m) + " columns");
  if (a_ineq.rows() > 0 && a_ineq.cols() != m)
    fail(ErrorKind::kStructure, "inequality row 0: expected " +
                                    std::to_string(m) + " columns");
  if (!a_eq.allFinite() || !b_eq.allFinite() || !a_ineq.allFinite() ||
      !b_ineq.allFinite())
    fail(ErrorKind::kStructure, "non-finite coefficient");
}

}  // namespace

VectorXd effective_beta(const VectorXd& b, double substitute) {
  if (!(substitute > 0.0))
    fail(ErrorKind::kDomain, "beta substitute must be positive");
  VectorXd beta(b.size());
  for (Eigen::Index i = 0; i < b.size(); ++i)
    beta(i) = b(i) != 0.0 ? std::abs(b(i)) : substitute;
  return beta;
}

Problem make_problem(int m, const MatrixXd& a_eq, const VectorXd& b_eq,
                     const MatrixXd& a_ineq, const VectorXd& b_ineq,
                     double beta_substitute) {
  check_dims(m, a_eq, b_eq, a_ineq, b_ineq);
  Problem p;
  p.m = m;
  p.a_eq = a_eq.rows() > 0 ? a_eq : MatrixXd(0, m);
  p.b_eq = b_eq;
  p.a_ineq = a_ineq.rows() > 0 ? a_ineq : MatrixXd(0, m);
  p.b_ineq = b_ineq;
  p.beta_substitute = beta_substitute;
  p.beta_eq = effective_beta(b_eq, beta_substitute);
  p.beta_ineq = effective_beta(b_ineq, beta_substitute);
  return p;
}

void check_tolerances(const Tolerances& t) {
  if (!(t.delta >= 0.0)) fail(ErrorKind::kDomain, "delta must be >= 0");
  if (!(t.epsilon > 0.0)) fail(ErrorKind::kDomain, "epsilon must be > 0");
  if (t.eta && !(*t.eta > 0.0)) fail(ErrorKind::kDomain, "eta must be > 0");
  if (t.theta && !(*t.theta > 0.0))
    fail(ErrorKind::kDomain, "theta must be > 0");
}

ValidationReport validate_problem(const Problem& p) {
  check_dims(p.m, p.a_eq, p.b_eq, p.a_ineq, p.b_ineq);
  ValidationReport r;
  if (p.n_eq() + p.n_ineq() == 0) {
    r.violations.push_back("no constraints");
    return r;
  }
  for (int i = 0; i < p.n_eq(); ++i) {
    if (p.a_eq.row(i).cwiseAbs().maxCoeff() == 0.0) {
      r.violations.push_back("zero row: equality " + std::to_string(i));
      if (p.b_eq(i) != 0.0)
        r.violations.push_back("infeasible trivially: equality " +
                               std::to_string(i));
    }
  }
  for (int i = 0; i < p.n_ineq(); ++i) {
    if (p.a_ineq.row(i).cwiseAbs().maxCoeff() == 0.0) {
      r.violations.push_back("zero row: inequality " + std::to_string(i));
      if (p.b_ineq(i) < 0.0)
        r.violations.push_back("infeasible trivially: inequality " +
                               std::to_string(i));
    }
  }
  for (int j = 0; j < p.m; ++j) {
    double used = 0.0;
    if (p.n_eq() > 0) used += p.a_eq.col(j).cwiseAbs().sum();
    if (p.n_ineq() > 0) used += p.a_ineq.col(j).cwiseAbs().sum();
    if (used == 0.0)
      r.violations.push_back("unused variable " + std::to_string(j));
  }
  if (!r.ok()) return r;
  VectorXd ones = VectorXd::Ones(p.m);
  LpResult lo = solve_lp(ones, Sense::kMin, p);
  if (lo.status == LpStatus::kInfeasible) {
    r.violations.push_back("infeasible");
    return r;
  }
  LpResult hi = solve_lp(ones, Sense::kMax, p);
  if (hi.status == LpStatus::kUnbounded)
    r.violations.push_back("unbounded sum possible");
  return r;
}

Problem scale_problem(const Problem& p, double c) {
  if (!(c > 0.0) || !std::isfinite(c))
    fail(ErrorKind::kDomain, "scale factor must be positive");
  Problem q = p;
  q.b_eq *= c;
  q.b_ineq *= c;
  q.beta_eq *= c;
  q.beta_ineq *= c;
  q.beta_substitute *= c;
  return q;
}

namespace {

using nlohmann::json;

void read_rows(const json& rows, int m, const char* what, MatrixXd& a,
               VectorXd& b) {
  if (!rows.is_array())
    fail(ErrorKind::kIo, std::string(what) + " must be a list");
  a.resize(static_cast<Eigen::Index>(rows.size()), m);
  b.resize(static_cast<Eigen::Index>(rows.size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    const json& row = rows[i];
    if (!row.is_object() || !row.contains("coeffs") || !row.contains("rhs"))
      fail(ErrorKind::kIo, std::string(what) + " row " + std::to_string(i) +
                               ": needs coeffs and rhs");
    const json& coeffs = row.at("coeffs");
    if (!coeffs.is_array() || coeffs.size() != static_cast<size_t>(m))
      fail(ErrorKind::kStructure, std::string(what) + " row " +
                                      std::to_string(i) + ": expected " +
                                      std::to_string(m) + " coefficients");
    for (int j = 0; j < m; ++j) a(i, j) = coeffs[j].get<double>();
    b(i) = row.at("rhs").get<double>();
  }
}

json write_rows(const MatrixXd& a, const VectorXd& b) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < b.size(); ++i) {
    json coeffs = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) coeffs.push_back(a(i, j));
    rows.push_back({{"coeffs", coeffs}, {"rhs", b(i)}});
  }
  return rows;
}

}  // namespace

Problem problem_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kIo, std::string("problem file: ") + e.what());
  }
  try {
    if (!doc.is_object() || !doc.contains("m"))
      fail(ErrorKind::kIo, "problem file: missing field m");
    int m = doc.at("m").get<int>();
    if (m <= 0) fail(ErrorKind::kStructure, "m must be positive");
    MatrixXd a_eq(0, m), a_ineq(0, m);
    VectorXd b_eq(0), b_ineq(0);
    if (doc.contains("equalities"))
      read_rows(doc.at("equalities"), m, "equalities", a_eq, b_eq);
    if (doc.contains("inequalities"))
      read_rows(doc.at("inequalities"), m, "inequalities", a_ineq, b_ineq);
    double sub = doc.value("beta_substitute", 1.0);
    return make_problem(m, a_eq, b_eq, a_ineq, b_ineq, sub);
  } catch (const json::exception& e) {
    fail(ErrorKind::kIo, std::string("problem file: ") + e.what());
  }
}

std::string problem_to_json(const Problem& p) {
  json doc = {{"m", p.m},
              {"equalities", write_rows(p.a_eq, p.b_eq)},
              {"inequalities", write_rows(p.a_ineq, p.b_ineq)},
              {"beta_substitute", p.beta_substitute}};
  return doc.dump(2) + "\n";
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::kIo, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return problem_from_json(ss.str());
}

void save_problem(const Problem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::kIo, "cannot write " + path);
  out << problem_to_json(p);
  if (!out) fail(ErrorKind::kIo, "write failed: " + path);
}

}  // namespace maxgent
