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

// Command-line front end. Uses only the C interface.
#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "maxgent/maxgent.h"

namespace {

enum Exit { kOk = 0, kMath = 1, kResource = 2, kUsage = 3 };

struct Failure {
  int code;
  std::string message;
};

int exit_for(mg_status s) {
  switch (s) {
    case MG_OK: return kOk;
    case MG_ERR_BUDGET: return kResource;
    case MG_ERR_DOMAIN:
    case MG_ERR_STRUCTURE:
    case MG_ERR_IO:
    case MG_ERR_ARGUMENT: return kUsage;
    default: return kMath;
  }
}

void check(mg_status s) {
  if (s != MG_OK)
    throw Failure{exit_for(s),
                  std::string(mg_status_name(s)) + ": " + mg_last_error()};
}

[[noreturn]] void usage(const std::string& msg) { throw Failure{kUsage, msg}; }

template <class T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using ProblemPtr = std::unique_ptr<mg_problem, Deleter<mg_problem, mg_problem_free>>;
using SolutionPtr =
    std::unique_ptr<mg_solution, Deleter<mg_solution, mg_solution_free>>;
using EnumPtr =
    std::unique_ptr<mg_enumeration, Deleter<mg_enumeration, mg_enumeration_free>>;
using SoundPtr =
    std::unique_ptr<mg_soundness, Deleter<mg_soundness, mg_soundness_free>>;

std::string fmt(double v, int digits) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

// One value is either a number (formatted per output mode) or a literal.
struct Cell {
  std::optional<double> num;
  std::string lit;
  Cell(double v) : num(v) {}
  Cell(int v) : lit(std::to_string(v)) {}
  Cell(std::int64_t v) : lit(std::to_string(v)) {}
  Cell(std::size_t v) : lit(std::to_string(v)) {}
  Cell(std::string s) : lit(std::move(s)) {}
  Cell(const char* s) : lit(s) {}
  std::string render(int digits) const {
    return num ? fmt(*num, digits) : lit;
  }
};

class Report {
 public:
  explicit Report(bool csv) : csv_(csv) {}

  void add(const std::string& key, Cell v) { rows_.push_back({key, {v}, false}); }
  void vec(const std::string& key, std::vector<Cell> v) {
    rows_.push_back({key, std::move(v), true});
  }
  void table(std::vector<std::string> header) { header_ = std::move(header); }
  void row(std::vector<Cell> r) { table_.push_back(std::move(r)); }

  void write(std::ostream& os) const {
    const int d = csv_ ? 12 : 4;
    for (const auto& r : rows_) {
      if (csv_) {
        os << r.key;
        for (const auto& c : r.values) os << ',' << quote(c.render(d));
        os << '\n';
      } else {
        os << r.key << ": ";
        if (r.is_vec) os << '(';
        for (std::size_t i = 0; i < r.values.size(); ++i)
          os << (i ? ", " : "") << r.values[i].render(d);
        if (r.is_vec) os << ')';
        os << '\n';
      }
    }
    if (header_.empty()) return;
    if (!rows_.empty()) os << '\n';
    std::vector<std::vector<std::string>> cells;
    cells.push_back(header_);
    for (const auto& r : table_) {
      std::vector<std::string> line;
      for (const auto& c : r) line.push_back(c.render(d));
      cells.push_back(std::move(line));
    }
    if (csv_) {
      for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i)
          os << (i ? "," : "") << quote(line[i]);
        os << '\n';
      }
      return;
    }
    std::vector<std::size_t> width(header_.size(), 0);
    for (const auto& line : cells)
      for (std::size_t i = 0; i < line.size() && i < width.size(); ++i)
        width[i] = std::max(width[i], line[i].size());
    for (const auto& line : cells) {
      for (std::size_t i = 0; i < line.size(); ++i)
        os << (i ? "  " : "") << std::setw(static_cast<int>(width[i]))
           << line[i];
      os << '\n';
    }
  }

 private:
  static std::string quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
  }

  struct Row {
    std::string key;
    std::vector<Cell> values;
    bool is_vec;
  };
  bool csv_;
  std::vector<Row> rows_;
  std::vector<std::string> header_;
  std::vector<std::vector<Cell>> table_;
};

struct Config {
  std::string command;
  std::string problem_path;
  std::optional<double> delta, epsilon, eta, theta, scale_factor;
  std::string mode;
  std::int64_t budget = 100000000;
  std::string format = "text";
  std::string out;
  double bound_offset = 0.0;
  int polish_every = 0;
  int max_fw_iterations = 0;
};

template <class V>
std::vector<Cell> cells(const std::vector<V>& v) {
  return std::vector<Cell>(v.begin(), v.end());
}

ProblemPtr load(const Config& cfg) {
  mg_problem* raw = nullptr;
  check(mg_problem_load(cfg.problem_path.c_str(), &raw));
  ProblemPtr p(raw);
  if (cfg.scale_factor) {
    mg_problem* scaled = nullptr;
    check(mg_problem_scale(p.get(), *cfg.scale_factor, &scaled));
    p.reset(scaled);
  }
  return p;
}

SolutionPtr solve(const Config& cfg, const mg_problem* p) {
  mg_solver_options o = mg_solver_options_default();
  if (cfg.polish_every > 0) o.polish_every = cfg.polish_every;
  if (cfg.max_fw_iterations > 0) o.max_fw_iterations = cfg.max_fw_iterations;
  mg_solution* raw = nullptr;
  check(mg_solve(p, &o, &raw));
  return SolutionPtr(raw);
}

mg_solution_info info_of(const mg_solution* s) {
  mg_solution_info i{};
  check(mg_solution_info_get(s, &i));
  return i;
}

std::vector<double> x_of(const mg_solution* s, int m) {
  std::vector<double> x(m);
  check(mg_solution_x(s, x.data(), m));
  return x;
}

std::vector<std::int64_t> nu_at(const mg_solution* s, int m, double c) {
  std::vector<std::int64_t> nu(m);
  check(mg_solution_nu_star(s, c, nu.data(), m));
  return nu;
}

double min_delta_of(const mg_problem* p, const std::vector<double>& v) {
  double d = 0.0;
  check(mg_min_delta(p, v.data(), static_cast<int>(v.size()), &d));
  return d;
}

template <class V>
std::vector<double> as_real(const std::vector<V>& v) {
  return std::vector<double>(v.begin(), v.end());
}

void add_solution(Report& r, const mg_problem* p, const mg_solution* s) {
  mg_solution_info i = info_of(s);
  std::vector<double> x = x_of(s, i.m_full);
  std::vector<double> chi(i.m_full);
  check(mg_solution_chi(s, chi.data(), i.m_full));
  r.add("m", i.m_full);
  r.add("m_reduced", i.m);
  r.vec("x_star", cells(x));
  r.vec("chi_star", cells(chi));
  r.add("s_star", i.s_star);
  r.add("G_star", i.g_star);
  std::vector<int> eq_rows(i.n_eq);
  std::vector<double> leq(i.n_eq);
  check(mg_solution_eq_rows(s, eq_rows.data(), i.n_eq));
  check(mg_solution_lambda_eq(s, leq.data(), i.n_eq));
  r.vec("eq_rows", cells(eq_rows));
  r.vec("lambda_eq", cells(leq));
  std::vector<int> brows(i.n_binding);
  std::vector<double> lb(i.n_binding);
  check(mg_solution_binding(s, brows.data(), lb.data(), i.n_binding));
  r.vec("binding_rows", cells(brows));
  r.vec("lambda_binding", cells(lb));
  r.add("Lambda_star", i.lambda_star);
  double th_full = 0.0;
  check(mg_problem_theta_inf(p, &th_full));
  r.add("theta_inf", th_full);
  r.add("theta_inf_reduced", i.theta_inf);
  r.add("s1", i.s1);
  r.add("s2", i.s2);
  r.add("n1", i.n1);
  r.add("n_star", i.n_star);
  r.add("n2", i.n2);
  std::vector<std::int64_t> nu = nu_at(s, i.m_full, 1.0);
  r.vec("nu_star", cells(nu));
  r.add("nu_star_min_delta", min_delta_of(p, as_real(nu)));
  r.add("kkt_residual", i.kkt_residual);
}

mg_tolerances tolerances(const Config& cfg) {
  mg_tolerances t{};
  t.delta = cfg.delta.value_or(0.0);
  t.epsilon = cfg.epsilon.value_or(0.0);
  t.has_eta = cfg.eta.has_value();
  t.eta = cfg.eta.value_or(0.0);
  t.has_theta = cfg.theta.has_value();
  t.theta = cfg.theta.value_or(0.0);
  return t;
}

// b scaled by c, followed by the integer range and nu* at c.
void add_scaled_summary(Report& r, const mg_problem* p, const mg_solution* s,
                        double c) {
  mg_solution_info i = info_of(s);
  int ne = mg_problem_n_eq(p), ni = mg_problem_n_ineq(p);
  std::vector<double> be(ne), bi(ni);
  check(mg_problem_b(p, be.data(), bi.data()));
  std::vector<Cell> b;
  for (double v : be) b.emplace_back(c * v);
  for (double v : bi) b.emplace_back(c * v);
  r.vec("scaled_b", b);
  r.add("scaled_n1", mg_ceil_sum(c * i.s1));
  r.add("scaled_n_star", mg_ceil_sum(c * i.s_star));
  r.add("scaled_n2", mg_ceil_sum(c * i.s2));
  r.vec("scaled_nu_star", cells(nu_at(s, i.m_full, c)));
}

void add_distance(Report& r, const mg_distance_report& d) {
  r.add("c1", d.c1);
  r.add("c2", d.c2);
  r.add("c3", d.c3);
  r.add("c_hat", d.c_hat);
  r.add("B_prime", d.B_prime);
  r.add("log_C3_dprime", d.log_C3_dprime);
  r.add("beta_star", d.beta_star);
  r.add("gamma_star", d.gamma_star);
  r.add("gamma_exact", d.gamma_exact);
  r.add("Lambda_star", d.lambda_star);
  r.add("theta_min", d.theta_min);
}

int cmd_solve(const Config& cfg, Report& r) {
  ProblemPtr p = load(cfg);
  SolutionPtr s = solve(cfg, p.get());
  add_solution(r, p.get(), s.get());
  return kOk;
}

int cmd_bounds(const Config& cfg, Report& r) {
  ProblemPtr p = load(cfg);
  SolutionPtr s = solve(cfg, p.get());
  mg_solution_info i = info_of(s.get());
  r.add("s1", i.s1);
  r.add("s2", i.s2);
  int has1 = 0, has2 = 0;
  double a1 = 0.0, a2 = 0.0;
  check(mg_problem_analytic_bounds(p.get(), &has1, &a1, &has2, &a2));
  r.add("s1_lower_analytic", has1 ? Cell(a1) : Cell("none"));
  r.add("s2_upper_analytic", has2 ? Cell(a2) : Cell("none"));
  double th = 0.0;
  check(mg_problem_theta_inf(p.get(), &th));
  r.add("theta_inf", th);
  r.add("theta_inf_reduced", i.theta_inf);
  r.add("n1", i.n1);
  r.add("n_star", i.n_star);
  r.add("n2", i.n2);
  if (cfg.eta) {
    if (!cfg.epsilon || !cfg.delta)
      usage("entropy bounds need --epsilon and --delta with --eta");
    mg_tolerances t = tolerances(cfg);
    t.has_theta = 0;
    mg_entropy_report e{};
    check(mg_threshold_entropy(s.get(), &t, &e));
    r.add("c_hat_lower", e.lower);
    r.add("c_hat_upper", e.upper);
  }
  if (cfg.theta) {
    double lb = 0.0;
    check(mg_threshold_lower_bound_distance(s.get(), *cfg.theta, &lb));
    r.add("c_hat_lower_distance", lb);
  }
  return kOk;
}

int cmd_round(const Config& cfg, Report& r) {
  ProblemPtr p = load(cfg);
  SolutionPtr s = solve(cfg, p.get());
  mg_solution_info i = info_of(s.get());
  std::vector<double> x = x_of(s.get(), i.m_full);
  std::vector<std::int64_t> nu = nu_at(s.get(), i.m_full, 1.0);
  std::vector<double> rounded(x.size());
  double dev = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    rounded[k] = std::floor(x[k] + 0.5);
    dev = std::max(dev, std::abs(x[k] - static_cast<double>(nu[k])));
  }
  r.vec("x_star", cells(x));
  r.vec("rounded_x", cells(rounded));
  r.add("rounded_x_min_delta", min_delta_of(p.get(), rounded));
  r.vec("nu_star", cells(nu));
  r.add("n_star", i.n_star);
  r.add("nu_star_min_delta", min_delta_of(p.get(), as_real(nu)));
  r.add("x_minus_nu_max", dev);
  r.add("rounding_delta", 0.5 / i.theta_inf);
  if (cfg.delta) {
    int in = 0;
    std::vector<double> v = as_real(nu);
    check(mg_membership(p.get(), v.data(), i.m_full, *cfg.delta, &in));
    r.add("nu_star_in_C_delta", in);
  }
  return kOk;
}

int cmd_threshold(const Config& cfg, Report& r) {
  std::string mode = cfg.mode;
  if (mode.empty()) {
    if (cfg.eta)
      mode = "entropy";
    else if (cfg.theta)
      mode = cfg.delta ? "distance" : "auto-delta";
    else
      usage("threshold needs --eta or --theta");
  }
  if (!cfg.epsilon) usage("threshold needs --epsilon");
  if (mode == "entropy") {
    if (!cfg.eta || !cfg.delta) usage("entropy mode needs --eta and --delta");
  } else if (mode == "distance") {
    if (!cfg.theta || !cfg.delta)
      usage("distance mode needs --theta and --delta");
  } else if (mode == "auto-delta") {
    if (!cfg.theta) usage("auto-delta mode needs --theta");
    if (cfg.delta) usage("auto-delta mode chooses delta; drop --delta");
  } else {
    usage("unknown mode " + mode);
  }
  ProblemPtr p = load(cfg);
  SolutionPtr s = solve(cfg, p.get());
  mg_tolerances t = tolerances(cfg);
  double c_hat = 0.0;
  r.add("mode", mode);
  r.add("epsilon", *cfg.epsilon);
  if (mode == "entropy") {
    t.has_theta = 0;
    mg_entropy_report e{};
    check(mg_threshold_entropy(s.get(), &t, &e));
    r.add("eta", e.eta);
    r.add("delta", e.delta);
    r.add("c1", e.c1);
    r.add("c2", e.c2);
    r.add("c3", e.c3);
    r.add("c_hat", e.c_hat);
    r.add("B", e.B);
    r.add("C0", e.C0);
    r.add("C2", e.C2);
    r.add("C3", e.C3);
    r.add("C4", e.C4);
    r.add("c_hat_lower", e.lower);
    r.add("c_hat_upper", e.upper);
    c_hat = e.c_hat;
  } else if (mode == "distance") {
    t.has_eta = 0;
    mg_distance_report d{};
    check(mg_threshold_distance(s.get(), &t, &d));
    r.add("theta", d.theta);
    r.add("delta", d.delta);
    add_distance(r, d);
    double lb = 0.0;
    check(mg_threshold_lower_bound_distance(s.get(), *cfg.theta, &lb));
    r.add("c_hat_lower", lb);
    c_hat = d.c_hat;
  } else {
    mg_auto_delta_report a{};
    check(mg_threshold_auto_delta(s.get(), *cfg.epsilon, *cfg.theta, &a));
    r.add("theta", *cfg.theta);
    r.add("delta0", a.delta0);
    r.add("c_hat", a.c_hat);
    r.add("c_hat_lower", a.lower);
    r.add("c_hat_at_delta0", a.at_delta0.c_hat);
    r.add("beta_star", a.at_delta0.beta_star);
    r.add("gamma_star", a.at_delta0.gamma_star);
    r.add("Lambda_star", a.at_delta0.lambda_star);
    c_hat = a.c_hat;
  }
  add_scaled_summary(r, p.get(), s.get(), c_hat);
  return kOk;
}

int cmd_enumerate(const Config& cfg, Report& r) {
  ProblemPtr p = load(cfg);
  SolutionPtr s = solve(cfg, p.get());
  mg_solution_info i = info_of(s.get());
  const double delta = cfg.delta.value_or(0.0);
  mg_enumeration* raw = nullptr;
  check(mg_enumerate(p.get(), delta, i.n1, i.n2, cfg.budget, &raw));
  EnumPtr e(raw);
  std::size_t need = 0;
  mg_enumeration_total(e.get(), nullptr, 0, &need);
  std::string total(need, '\0');
  check(mg_enumeration_total(e.get(), total.data(), need, &need));
  total.resize(need - 1);
  r.add("delta", delta);
  r.add("n1", i.n1);
  r.add("n2", i.n2);
  r.add("count", mg_enumeration_count(e.get()));
  r.add("total_realizations", total);
  r.add("nodes", static_cast<std::int64_t>(mg_enumeration_nodes(e.get())));
  const int m = i.m_full;
  std::vector<std::string> header;
  for (int j = 0; j < m; ++j) header.push_back("nu_" + std::to_string(j + 1));
  header.insert(header.end(), {"n", "count"});
  r.table(header);
  std::vector<std::int64_t> v(m);
  for (std::size_t k = 0; k < mg_enumeration_count(e.get()); ++k) {
    check(mg_enumeration_vector(e.get(), k, v.data(), m));
    mg_enumeration_realizations(e.get(), k, nullptr, 0, &need);
    std::string c(need, '\0');
    check(mg_enumeration_realizations(e.get(), k, c.data(), need, &need));
    c.resize(need - 1);
    std::vector<Cell> row = cells(v);
    std::int64_t n = 0;
    for (auto x : v) n += x;
    row.emplace_back(n);
    row.emplace_back(c);
    r.row(std::move(row));
  }
  if (!cfg.out.empty()) {
    mg_enumeration_csv(e.get(), nullptr, 0, &need);
    std::string csv(need, '\0');
    check(mg_enumeration_csv(e.get(), csv.data(), need, &need));
    csv.resize(need - 1);
    std::ofstream f(cfg.out);
    if (!(f << csv)) throw Failure{kUsage, "cannot write " + cfg.out};
  }
  return kOk;
}

int cmd_verify(const Config& cfg, Report& r) {
  ProblemPtr p = load(cfg);
  SolutionPtr s = solve(cfg, p.get());
  std::vector<mg_tolerances> grid;
  if (cfg.delta || cfg.eta || cfg.theta) {
    mg_tolerances t = tolerances(cfg);
    t.epsilon = cfg.epsilon.value_or(1e-3);
    grid.push_back(t);
  } else {
    for (double d : {0.0, 0.05})
      for (double q : {0.1, 0.3, 0.5}) {
        mg_tolerances t{};
        t.delta = d;
        t.epsilon = cfg.epsilon.value_or(1e-3);
        t.has_eta = 1;
        t.eta = q;
        t.has_theta = 1;
        t.theta = q;
        grid.push_back(t);
      }
  }
  mg_soundness* raw = nullptr;
  check(mg_verify(s.get(), grid.data(), grid.size(), cfg.budget,
                  cfg.bound_offset, &raw));
  SoundPtr rep(raw);
  const int violations = mg_soundness_violations(rep.get());
  const int skipped = mg_soundness_skipped(rep.get());
  r.add("grid_points", grid.size());
  r.add("checks", mg_soundness_count(rep.get()));
  r.add("violations", violations);
  r.add("skipped", skipped);
  r.table({"bound", "delta", "param", "epsilon", "log_bound", "exact_log_ratio",
           "margin", "size_A", "size_B", "implication", "note"});
  for (std::size_t k = 0; k < mg_soundness_count(rep.get()); ++k) {
    mg_soundness_point pt{};
    check(mg_soundness_point_get(rep.get(), k, &pt));
    std::string impl = !pt.implication_checked ? "n/a"
                       : pt.implication_ok     ? "ok"
                                               : "FAIL";
    if (pt.skipped) {
      r.row({pt.kind == MG_BOUND_ENTROPY ? "entropy" : "distance", pt.delta,
             pt.param, pt.epsilon, "-", "-", "-", "-", "-", "-",
             mg_soundness_note(rep.get(), k)});
      continue;
    }
    r.row({pt.kind == MG_BOUND_ENTROPY ? "entropy" : "distance", pt.delta,
           pt.param, pt.epsilon, pt.log_bound, pt.exact_log_ratio, pt.margin,
           pt.size_a, pt.size_b, impl, mg_soundness_note(rep.get(), k)});
  }
  if (violations > 0) return kMath;
  if (skipped > 0) return kResource;
  return kOk;
}

int cmd_scale(const Config& cfg, Report& r) {
  if (!cfg.scale_factor) usage("scale needs --scale-factor");
  if (cfg.out.empty()) usage("scale needs --out");
  ProblemPtr p = load(cfg);
  check(mg_problem_save(p.get(), cfg.out.c_str()));
  r.add("scale_factor", *cfg.scale_factor);
  r.add("written", cfg.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maxgent: maximum generalized entropy and concentration"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("problem", cfg.problem_path, "problem JSON file")->required();
    sub->add_option("--scale-factor", cfg.scale_factor,
                    "multiply b by this factor first");
    sub->add_option("--format", cfg.format, "text or csv")
        ->check(CLI::IsMember({"text", "csv"}));
    sub->add_option("--polish-every", cfg.polish_every,
                    "solver: polish interval");
    sub->add_option("--max-iterations", cfg.max_fw_iterations,
                    "solver: iteration cap");
  };
  auto add_out = [&](CLI::App* sub, const char* help) {
    sub->add_option("--out", cfg.out, help);
  };
  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--delta", cfg.delta, "constraint tolerance");
    sub->add_option("--epsilon", cfg.epsilon, "concentration tolerance");
    sub->add_option("--eta", cfg.eta, "relative entropy deviation");
    sub->add_option("--theta", cfg.theta, "relative distance");
  };

  auto* solve_cmd = app.add_subcommand("solve", "solve and report x*, G*, multipliers");
  add_common(solve_cmd);
  add_out(solve_cmd, "report file");
  auto* bounds_cmd = app.add_subcommand("bounds", "sum bounds and threshold bounds");
  add_common(bounds_cmd);
  add_tol(bounds_cmd);
  add_out(bounds_cmd, "report file");
  auto* round_cmd = app.add_subcommand("round", "integer vector nu* and its tolerance");
  add_common(round_cmd);
  round_cmd->add_option("--delta", cfg.delta, "membership tolerance");
  add_out(round_cmd, "report file");
  auto* thr_cmd = app.add_subcommand("threshold", "concentration threshold");
  add_common(thr_cmd);
  add_tol(thr_cmd);
  thr_cmd->add_option("--mode", cfg.mode, "entropy, distance or auto-delta")
      ->check(CLI::IsMember({"entropy", "distance", "auto-delta"}));
  add_out(thr_cmd, "report file");
  auto* enum_cmd = app.add_subcommand("enumerate", "list all count vectors");
  add_common(enum_cmd);
  enum_cmd->add_option("--delta", cfg.delta, "constraint tolerance");
  enum_cmd->add_option("--budget", cfg.budget, "node budget");
  add_out(enum_cmd, "CSV dump of the vectors");
  auto* ver_cmd = app.add_subcommand("verify", "check bounds against enumeration");
  add_common(ver_cmd);
  add_tol(ver_cmd);
  ver_cmd->add_option("--budget", cfg.budget, "node budget");
  ver_cmd->add_option("--bound-offset", cfg.bound_offset)->group("");
  add_out(ver_cmd, "report file");
  auto* scale_cmd = app.add_subcommand("scale", "write a scaled problem file");
  add_common(scale_cmd);
  add_out(scale_cmd, "output problem file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  const bool csv = cfg.format == "csv";
  Report report(csv);
  int code = kOk;
  try {
    if (cfg.command == "solve") code = cmd_solve(cfg, report);
    else if (cfg.command == "bounds") code = cmd_bounds(cfg, report);
    else if (cfg.command == "round") code = cmd_round(cfg, report);
    else if (cfg.command == "threshold") code = cmd_threshold(cfg, report);
    else if (cfg.command == "enumerate") code = cmd_enumerate(cfg, report);
    else if (cfg.command == "verify") code = cmd_verify(cfg, report);
    else if (cfg.command == "scale") code = cmd_scale(cfg, report);
  } catch (const Failure& f) {
    report.write(std::cout);
    std::cerr << "maxgent " << cfg.command << ": " << f.message << "\n";
    return f.code;
  }
  const bool to_file = !cfg.out.empty() && cfg.command != "enumerate" &&
                       cfg.command != "scale";
  if (to_file) {
    std::ofstream f(cfg.out);
    report.write(f);
    if (!f) {
      std::cerr << "maxgent: cannot write " << cfg.out << "\n";
      return kUsage;
    }
  } else {
    report.write(std::cout);
  }
  if (code == kMath) std::cerr << "maxgent verify: soundness violations found\n";
  if (code == kResource) std::cerr << "maxgent verify: grid points skipped (budget)\n";
  return code;
}
