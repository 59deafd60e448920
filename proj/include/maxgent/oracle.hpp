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

#ifndef MAXGENT_ORACLE_HPP_
#define MAXGENT_ORACLE_HPP_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "maxgent/discrete.hpp"
#include "maxgent/entropy.hpp"
#include "maxgent/model.hpp"
#include "maxgent/solver.hpp"

namespace maxgent {

inline constexpr std::int64_t kDefaultNodeBudget = 100000000;

struct EnumeratedVector {
  CountVector nu;
  BigInt count;  // multinomial #nu
};

struct EnumerationResult {
  std::vector<EnumeratedVector> vectors;  // lexicographic order
  BigInt total;
  double total_log = -std::numeric_limits<double>::infinity();
  double delta = 0.0;
  IntegerRange range;
  std::int64_t nodes = 0;

  std::size_t count() const { return vectors.size(); }
};

// All nu in N^m with range.n1 <= sum <= range.n2 and nu in C(delta).
EnumerationResult enumerate_feasible(const Problem& p, double delta,
                                     const IntegerRange& range,
                                     std::int64_t budget = kDefaultNodeBudget);

struct Partition {
  std::vector<std::size_t> a;  // indices into the enumeration
  std::vector<std::size_t> b;
  BigInt total_a;
  BigInt total_b;
};

Partition partition_entropy(const EnumerationResult& en, const Solution& sol,
                            double eta);
Partition partition_distance(const EnumerationResult& en, const Solution& sol,
                             double theta);

// ln #nu* - ln sum_B #nu; +inf for an empty B.
double exact_ratio(const BigInt& nu_star_count, const BigInt& b_total);
double exact_ratio(const CountVector& nu_star, const Partition& part);

enum class BoundKind { kEntropy, kDistance };

struct SoundnessPoint {
  BoundKind kind = BoundKind::kEntropy;
  double delta = 0.0;
  double param = 0.0;  // eta or theta
  double epsilon = 0.0;
  bool skipped = false;
  std::string note;
  double log_bound = 0.0;
  double exact_log_ratio = 0.0;
  double margin = 0.0;  // exact - bound
  std::size_t size_a = 0, size_b = 0;
  bool implication_checked = false;
  bool implication_ok = true;
};

struct SoundnessReport {
  std::vector<SoundnessPoint> points;
  IntegerRange range;
  CountVector nu_star;
  int violations = 0;
  int skipped = 0;
  bool ok() const { return violations == 0; }
};

struct VerifyOptions {
  std::int64_t budget = kDefaultNodeBudget;
  double bound_offset = 0.0;  // added to every bound; test hook
};

// Each tolerance set with eta yields an entropy check, with theta a
// distance check. Runs on sol.problem() at its own scale.
SoundnessReport verify_soundness(const Solution& sol, const SumBounds& bounds,
                                 const std::vector<Tolerances>& grid,
                                 const VerifyOptions& opts = {});

// Columns nu_1..nu_m, n, count, G.
void write_enumeration_csv(const EnumerationResult& en, std::ostream& os);

}  // namespace maxgent

#endif  // MAXGENT_ORACLE_HPP_
