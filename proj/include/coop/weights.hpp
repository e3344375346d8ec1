// Copyright 2026 The coopgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COOP_WEIGHTS_HPP
#define COOP_WEIGHTS_HPP

#include <vector>

#include "coop/coalition.hpp"
#include "coop/rational.hpp"

namespace coop {

// Positive weights plus an ordered partition (N_1, ..., N_m), listed from
// lowest to highest priority. Priorities are 1-based; p(i) = k iff i in N_k.
class WeightSystem {
 public:
  WeightSystem(std::vector<Rational> weights, std::vector<Coalition> partition);

  // Sigma = {N}.
  static WeightSystem simple(std::vector<Rational> weights);
  // Unit weights, Sigma = {N}.
  static WeightSystem uniform(int n);
  // Builds the partition from per-player priorities (1-based, every level
  // 1..max must be used).
  static WeightSystem from_priorities(std::vector<Rational> weights, const std::vector<int>& priority);

  int n() const { return static_cast<int>(weights_.size()); }
  int levels() const { return static_cast<int>(partition_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(int i) const { return weights_[i]; }
  const std::vector<Coalition>& partition() const { return partition_; }
  int priority(int i) const { return priority_[i]; }
  const std::vector<int>& priorities() const { return priority_; }

  // Restriction to the members of T, renumbered in increasing order. Empty
  // layers are dropped, relative order kept.
  WeightSystem restricted(Coalition t) const;

  // Pure lookups for nonempty masks, no validation (hot paths).
  int priority_mask(Mask s) const;
  Mask top_mask(Mask s) const;
  Rational total_mask(Mask s) const;
  // Players whose priority is at most k (k in 0..m).
  Mask at_or_below(int k) const { return at_or_below_[k]; }

 private:
  std::vector<Rational> weights_;
  std::vector<Coalition> partition_;
  std::vector<int> priority_;
  std::vector<Mask> at_or_below_;  // at_or_below_[k]: players with priority <= k
};

int priority_of(const WeightSystem& ws, Coalition s);
Coalition top_set(const WeightSystem& ws, Coalition s);
Rational effective_weight(const WeightSystem& ws, Coalition s, int i);
Rational effective_total(const WeightSystem& ws, Coalition s);

// Per-mask caches of p(S) and the effective total, reused by the heavy
// scans. Index 0 holds priority 0 and total 0.
struct WeightTables {
  std::vector<int> priority;
  std::vector<Mask> top;
  std::vector<Rational> total;
};

WeightTables build_weight_tables(const WeightSystem& ws);

}  // namespace coop

#endif  // COOP_WEIGHTS_HPP
