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

#include "maxgent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "maxgent/concentration.hpp"

namespace maxgent {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Row {
  std::vector<double> a;
  double lo = -kInf;
  double hi = kInf;
};

double prop_tol(double v) {
  return 1e-9 * (1.0 + (std::isfinite(v) ? std::abs(v) : 0.0));
}

// Intersects [lo, hi] with {v : lo_r <= a v <= hi_r}.
void restrict_by(double a, double lo_r, double hi_r, double& lo, double& hi) {
  if (a > 0.0) {
    hi = std::min(hi, std::floor(hi_r / a + prop_tol(hi_r / a)));
    lo = std::max(lo, std::ceil(lo_r / a - prop_tol(lo_r / a)));
  } else if (a < 0.0) {
    hi = std::min(hi, std::floor(lo_r / a + prop_tol(lo_r / a)));
    lo = std::max(lo, std::ceil(hi_r / a - prop_tol(hi_r / a)));
  }
}

std::vector<Row> build_rows(const Problem& p, double delta,
                            const IntegerRange& range) {
  std::vector<Row> rows;
  for (int i = 0; i < p.n_eq(); ++i) {
    Row r;
    r.a.resize(p.m);
    for (int j = 0; j < p.m; ++j) r.a[j] = p.a_eq(i, j);
    r.lo = p.b_eq(i) - delta * p.beta_eq(i);
    r.hi = p.b_eq(i) + delta * p.beta_eq(i);
    rows.push_back(std::move(r));
  }
  for (int i = 0; i < p.n_ineq(); ++i) {
    Row r;
    r.a.resize(p.m);
    for (int j = 0; j < p.m; ++j) r.a[j] = p.a_ineq(i, j);
    r.hi = p.b_ineq(i) + delta * p.beta_ineq(i);
    rows.push_back(std::move(r));
  }
  Row sum;
  sum.a.assign(p.m, 1.0);
  sum.lo = static_cast<double>(range.n1);
  sum.hi = static_cast<double>(range.n2);
  rows.push_back(std::move(sum));
  return rows;
}

double term_min(double a, double lb, double ub) {
  return std::min(a * lb, a * ub);
}
double term_max(double a, double lb, double ub) {
  return std::max(a * lb, a * ub);
}

// Single-row interval propagation to a fixpoint. False when empty.
bool tighten(const std::vector<Row>& rows, std::vector<double>& lb,
             std::vector<double>& ub) {
  const std::size_t m = lb.size();
  for (int round = 0; round < 1000; ++round) {
    bool changed = false;
    for (const Row& r : rows) {
      double mn = 0.0, mx = 0.0;
      for (std::size_t k = 0; k < m; ++k) {
        mn += term_min(r.a[k], lb[k], ub[k]);
        mx += term_max(r.a[k], lb[k], ub[k]);
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (r.a[j] == 0.0) continue;
        double omn = mn - term_min(r.a[j], lb[j], ub[j]);
        double omx = mx - term_max(r.a[j], lb[j], ub[j]);
        double lo = lb[j], hi = ub[j];
        restrict_by(r.a[j], r.lo - omx, r.hi - omn, lo, hi);
        if (lo > hi) return false;
        if (lo > lb[j] || hi < ub[j]) {
          mn += term_min(r.a[j], lo, hi) - term_min(r.a[j], lb[j], ub[j]);
          mx += term_max(r.a[j], lo, hi) - term_max(r.a[j], lb[j], ub[j]);
          lb[j] = lo;
          ub[j] = hi;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  return true;
}

}  // namespace

EnumerationResult enumerate_feasible(const Problem& p, double delta,
                                     const IntegerRange& range,
                                     std::int64_t budget) {
  if (!(delta >= 0.0)) fail(ErrorKind::kDomain, "delta must be >= 0");
  if (range.n1 < 0 || range.n2 < range.n1)
    fail(ErrorKind::kDomain, "invalid integer range");
  if (range.n2 > kExactCountLimit)
    fail(ErrorKind::kBudget, "n2 = " + std::to_string(range.n2) +
                                 " exceeds the exact counting limit");
  if (budget <= 0) fail(ErrorKind::kDomain, "budget must be positive");
  EnumerationResult out;
  out.delta = delta;
  out.range = range;
  out.total = 0;
  const int m = p.m;
  std::vector<Row> rows = build_rows(p, delta, range);
  std::vector<double> lb(m, 0.0), ub(m, static_cast<double>(range.n2));
  if (m == 0 || !tighten(rows, lb, ub)) return out;

  const std::size_t nr = rows.size();
  // suf_min[r][i]: least value of rows[r] over coordinates >= i.
  std::vector<std::vector<double>> suf_min(nr, std::vector<double>(m + 1, 0.0));
  std::vector<std::vector<double>> suf_max = suf_min;
  for (std::size_t r = 0; r < nr; ++r)
    for (int i = m - 1; i >= 0; --i) {
      suf_min[r][i] = suf_min[r][i + 1] + term_min(rows[r].a[i], lb[i], ub[i]);
      suf_max[r][i] = suf_max[r][i + 1] + term_max(rows[r].a[i], lb[i], ub[i]);
    }

  std::vector<double> part(nr, 0.0);
  std::vector<std::int64_t> cur(m, 0);
  VectorXd real(m);

  auto frontier = [&](int depth) {
    std::ostringstream os;
    os << "enumeration budget of " << budget << " nodes exhausted at prefix (";
    for (int k = 0; k < depth; ++k) os << (k ? "," : "") << cur[k];
    os << ")";
    return os.str();
  };

  auto dfs = [&](auto&& self, int i) -> void {
    if (i == m) {
      for (int k = 0; k < m; ++k) real(k) = static_cast<double>(cur[k]);
      std::int64_t n = 0;
      for (auto v : cur) n += v;
      if (n < range.n1 || n > range.n2 || !membership(real, p, delta)) return;
      CountVector nu(cur);
      BigInt c = realizations(nu);
      out.total += c;
      out.vectors.push_back({std::move(nu), std::move(c)});
      return;
    }
    double lo = lb[i], hi = ub[i];
    for (std::size_t r = 0; r < nr; ++r) {
      const double a = rows[r].a[i];
      if (a == 0.0) continue;
      restrict_by(a, rows[r].lo - part[r] - suf_max[r][i + 1],
                  rows[r].hi - part[r] - suf_min[r][i + 1], lo, hi);
    }
    if (lo > hi) return;
    for (auto v = static_cast<std::int64_t>(lo);
         v <= static_cast<std::int64_t>(hi); ++v) {
      if (++out.nodes > budget) fail(ErrorKind::kBudget, frontier(i));
      cur[i] = v;
      for (std::size_t r = 0; r < nr; ++r) part[r] += rows[r].a[i] * v;
      self(self, i + 1);
      for (std::size_t r = 0; r < nr; ++r) part[r] -= rows[r].a[i] * v;
    }
    cur[i] = 0;
  };
  dfs(dfs, 0);
  out.total_log = log_bigint(out.total);
  return out;
}

namespace {

void check_dims(const EnumerationResult& en, const Solution& sol) {
  for (const auto& e : en.vectors)
    if (e.nu.size() != sol.m())
      fail(ErrorKind::kStructure,
           "enumeration dimension differs from the solution dimension");
}

template <class InA>
Partition split(const EnumerationResult& en, InA in_a) {
  Partition part;
  part.total_a = 0;
  part.total_b = 0;
  for (std::size_t k = 0; k < en.vectors.size(); ++k) {
    if (in_a(en.vectors[k].nu)) {
      part.a.push_back(k);
      part.total_a += en.vectors[k].count;
    } else {
      part.b.push_back(k);
      part.total_b += en.vectors[k].count;
    }
  }
  return part;
}

}  // namespace

Partition partition_entropy(const EnumerationResult& en, const Solution& sol,
                            double eta) {
  check_dims(en, sol);
  const double cut = (1.0 - eta) * sol.g_star;
  return split(en, [&](const CountVector& nu) {
    return nu.n() > 0 && gen_entropy(nu) >= cut;
  });
}

Partition partition_distance(const EnumerationResult& en, const Solution& sol,
                             double theta) {
  check_dims(en, sol);
  return split(en, [&](const CountVector& nu) {
    const double n = static_cast<double>(nu.n());
    double dist = (nu.as_real() - sol.x_star).lpNorm<1>();
    return dist <= std::abs(n - sol.s_star) + std::min(n, sol.s_star) * theta;
  });
}

double exact_ratio(const BigInt& nu_star_count, const BigInt& b_total) {
  if (b_total == 0) return kInf;
  return log_bigint(nu_star_count) - log_bigint(b_total);
}

double exact_ratio(const CountVector& nu_star, const Partition& part) {
  return exact_ratio(realizations(nu_star), part.total_b);
}

SoundnessReport verify_soundness(const Solution& sol, const SumBounds& bounds,
                                 const std::vector<Tolerances>& grid,
                                 const VerifyOptions& opts) {
  const Problem& p = sol.problem();
  SoundnessReport rep;
  rep.range = integer_range(bounds, sol.s_star);
  rep.nu_star = optimal_count_vector(sol);
  const BigInt star_count = realizations(rep.nu_star);
  std::map<double, std::optional<EnumerationResult>> cache;
  std::map<double, std::string> cache_err;

  auto evaluate = [&](SoundnessPoint pt, const Partition& part,
                      const EnumerationResult& en) {
    pt.size_a = part.a.size();
    pt.size_b = part.b.size();
    pt.exact_log_ratio = exact_ratio(star_count, part.total_b);
    pt.margin = pt.exact_log_ratio - pt.log_bound;
    if (pt.margin < -1e-12 * (1.0 + std::abs(pt.log_bound))) ++rep.violations;
    if (pt.exact_log_ratio >= -std::log(pt.epsilon)) {
      pt.implication_checked = true;
      double la = log_bigint(part.total_a);
      // Nothing to count: holds vacuously.
      pt.implication_ok =
          en.total == 0 ||
          la + std::log1p(pt.epsilon) >= en.total_log - 1e-12 * en.total_log;
      if (!pt.implication_ok) ++rep.violations;
    }
    rep.points.push_back(std::move(pt));
  };

  for (const Tolerances& tol : grid) {
    if (!(tol.delta >= 0.0) || !(tol.epsilon > 0.0 && tol.epsilon < 1.0))
      fail(ErrorKind::kDomain, "grid point needs delta >= 0, 0 < epsilon < 1");
    auto it = cache.find(tol.delta);
    if (it == cache.end()) {
      try {
        it = cache.emplace(tol.delta,
                           enumerate_feasible(p, tol.delta, rep.range,
                                              opts.budget))
                 .first;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::kBudget) throw;
        it = cache.emplace(tol.delta, std::nullopt).first;
        cache_err[tol.delta] = e.what();
      }
    }
    std::vector<SoundnessPoint> todo;
    if (tol.eta) {
      SoundnessPoint pt;
      pt.kind = BoundKind::kEntropy;
      pt.param = *tol.eta;
      todo.push_back(pt);
    }
    if (tol.theta) {
      SoundnessPoint pt;
      pt.kind = BoundKind::kDistance;
      pt.param = *tol.theta;
      todo.push_back(pt);
    }
    for (SoundnessPoint& pt : todo) {
      pt.delta = tol.delta;
      pt.epsilon = tol.epsilon;
      if (!it->second) {
        pt.skipped = true;
        pt.note = cache_err[tol.delta];
        ++rep.skipped;
        rep.points.push_back(std::move(pt));
        continue;
      }
      const EnumerationResult& en = *it->second;
      if (pt.kind == BoundKind::kEntropy) {
        pt.log_bound =
            ratio_bound_entropy(sol, bounds, pt.param).log_bound + opts.bound_offset;
        evaluate(pt, partition_entropy(en, sol, pt.param), en);
      } else {
        RatioBound rb = ratio_bound_distance(sol, bounds, tol.delta, pt.param);
        pt.log_bound = rb.log_bound + opts.bound_offset;
        if (!rb.useful) pt.note = "bound exponent not positive";
        evaluate(pt, partition_distance(en, sol, pt.param), en);
      }
    }
  }
  return rep;
}

void write_enumeration_csv(const EnumerationResult& en, std::ostream& os) {
  const int m = en.vectors.empty() ? 0 : en.vectors.front().nu.size();
  for (int j = 0; j < m; ++j) os << "nu_" << (j + 1) << ",";
  os << "n,count,G\n";
  std::ostringstream num;
  num << std::setprecision(12);
  for (const auto& e : en.vectors) {
    for (auto v : e.nu.nu) os << v << ",";
    num.str("");
    num << (e.nu.n() > 0 ? gen_entropy(e.nu) : 0.0);
    os << e.nu.n() << "," << e.count.str() << "," << num.str() << "\n";
  }
}

}  // namespace maxgent
