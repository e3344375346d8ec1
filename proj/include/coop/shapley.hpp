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

#ifndef COOP_SHAPLEY_HPP
#define COOP_SHAPLEY_HPP

#include <utility>
#include <vector>

#include "coop/coalition.hpp"
#include "coop/game.hpp"
#include "coop/graph.hpp"
#include "coop/rational.hpp"
#include "coop/weights.hpp"

namespace coop {

// One payoff per player.
using Allocation = std::vector<Rational>;

// Orders with positive probability; order[0] is drawn first.
struct OrderDistribution {
  int n = 0;
  std::vector<std::pair<std::vector<int>, Rational>> entries;
};

// Largest n for which orders are enumerated.
inline constexpr int kMaxOrderPlayers = 9;

Allocation shapley(const TuGame& v);

Allocation weighted_shapley_dividends(const TuGame& v, const WeightSystem& ws);

OrderDistribution order_distribution(const WeightSystem& ws);
// Expected marginal contribution to the tail set of each order.
Allocation weighted_shapley_orders(const TuGame& v, const WeightSystem& ws);
Allocation weighted_shapley_orders(const TuGame& v, const OrderDistribution& dist);

// psi[T][i] for every coalition T and member i (0 for non-members).
struct PsiTable {
  int n = 0;
  std::vector<std::vector<Rational>> psi;

  Allocation at(Coalition t) const { return psi[t.mask]; }
};

PsiTable psi_table(const TuGame& v, const WeightSystem& ws);
Allocation weighted_shapley_recursive(const TuGame& v, const WeightSystem& ws);

// Alternating sum over S <= T <= universe with p(T) = p(S). Requires i in S.
// The universe defaults to the full player set.
Rational gamma_coefficient(const WeightSystem& ws, Coalition s, int i);
Rational gamma_coefficient(const WeightSystem& ws, Coalition s, int i, Coalition universe);
Allocation weighted_shapley_gamma(const TuGame& v, const WeightSystem& ws);

Allocation weighted_myerson(const TuGame& v, const Graph& g, const WeightSystem& ws);

}  // namespace coop

#endif  // COOP_SHAPLEY_HPP
