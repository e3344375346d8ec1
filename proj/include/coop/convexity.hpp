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

#ifndef COOP_CONVEXITY_HPP
#define COOP_CONVEXITY_HPP

#include <vector>

#include "coop/coalition.hpp"
#include "coop/game.hpp"
#include "coop/rational.hpp"
#include "coop/shapley.hpp"
#include "coop/weights.hpp"

namespace coop {

// One failing pair S < T. lhs = sum_i w^T_i (v(S) - v(S \ i)) and
// rhs = sum_i w^T_i (v(T) - v(T \ i)), both over i in S; failing means lhs > rhs.
struct Violation {
  Coalition s;
  Coalition t;
  Rational lhs;
  Rational rhs;
};

struct ConvexityReport {
  bool holds = true;
  // Sorted by (T, S) mask; with collect_all off, at most the smallest one.
  std::vector<Violation> violations;
};

// Scans every nonempty S strictly inside T, skipping pairs with p(S) < p(T).
ConvexityReport check_weighted_average_convexity(const TuGame& v, const WeightSystem& ws, bool collect_all = false);
ConvexityReport check_average_convexity(const TuGame& v, bool collect_all = false);
// Same verdict, scanning only pairs free of null players.
ConvexityReport check_with_null_player_reduction(const TuGame& v, const WeightSystem& ws, bool collect_all = false);

// Left and right sides for one pair, whatever their order.
Violation evaluate_pair(const TuGame& v, const WeightSystem& ws, Coalition s, Coalition t);

bool core_contains(const TuGame& v, const Allocation& x);

// v(S u T) - v(T) >= v(S u U) - v(U) for disjoint S, T, U inside T, and
// every s in S with p(s) > p(U), p(s) >= p(T) (p of the empty set is 0).
struct TripleViolation {
  Coalition s;
  Coalition t;
  Coalition u;
  Rational lhs;
  Rational rhs;
};

struct WeakSuperadditivityReport {
  bool holds = true;
  std::vector<TripleViolation> violations;
};

inline constexpr int kMaxTriplePlayers = 12;

WeakSuperadditivityReport weak_superadditivity_holds(const TuGame& v, const WeightSystem& ws,
                                                     bool collect_all = false);

struct Theorem1Result {
  bool is_wac = false;
  Allocation phi;
  bool in_core = false;
};

Theorem1Result theorem1_pipeline(const TuGame& v, const WeightSystem& ws);

}  // namespace coop

#endif  // COOP_CONVEXITY_HPP
