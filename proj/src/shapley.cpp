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

#include "coop/shapley.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "coop/errors.hpp"
#include "coop/parallel.hpp"

namespace coop {
namespace {

void require_match(const TuGame& v, const WeightSystem& ws) {
  if (v.n() != ws.n()) {
    throw DimensionError("game has " + std::to_string(v.n()) + " players but weight system has " +
                         std::to_string(ws.n()));
  }
}

// Extends `prefix` by every order of the players in `layers[k..]`, each
// layer drawn without replacement proportionally to weight.
void expand_orders(const WeightSystem& ws, const std::vector<Mask>& layers, std::size_t k, Mask remaining,
                   std::vector<int>& prefix, const Rational& prob, OrderDistribution& out) {
  if (remaining == 0) {
    if (k + 1 >= layers.size()) {
      out.entries.emplace_back(prefix, prob);
      return;
    }
    ++k;
    remaining = layers[k];
  }
  Rational total = 0;
  for_each_player(remaining, [&](int j) { total += ws.weight(j); });
  for_each_player(remaining, [&](int j) {
    prefix.push_back(j);
    expand_orders(ws, layers, k, remaining & ~(Mask{1} << j), prefix, prob * ws.weight(j) / total, out);
    prefix.pop_back();
  });
}

}  // namespace

Allocation shapley(const TuGame& v) {
  const UnanimityDecomposition d = unanimity_coefficients(v);
  Allocation x(v.n(), Rational(0));
  for (Mask s = 1; s < d.coefficients.size(); ++s) {
    if (d.coefficients[s] == 0) continue;
    const Rational share = d.coefficients[s] / Coalition(s).size();
    for_each_player(s, [&](int i) { x[i] += share; });
  }
  return x;
}

Allocation weighted_shapley_dividends(const TuGame& v, const WeightSystem& ws) {
  require_match(v, ws);
  const UnanimityDecomposition d = unanimity_coefficients(v);
  const WeightTables wt = build_weight_tables(ws);
  Allocation x(v.n(), Rational(0));
  for (Mask s = 1; s < d.coefficients.size(); ++s) {
    if (d.coefficients[s] == 0) continue;
    const Rational per_weight = d.coefficients[s] / wt.total[s];
    for_each_player(wt.top[s], [&](int i) { x[i] += ws.weight(i) * per_weight; });
  }
  return x;
}

OrderDistribution order_distribution(const WeightSystem& ws) {
  if (ws.n() > kMaxOrderPlayers) {
    throw std::invalid_argument("order enumeration limited to " + std::to_string(kMaxOrderPlayers) + " players");
  }
  std::vector<Mask> layers;
  for (auto it = ws.partition().rbegin(); it != ws.partition().rend(); ++it) layers.push_back(it->mask);
  OrderDistribution out;
  out.n = ws.n();
  std::vector<int> prefix;
  expand_orders(ws, layers, 0, layers[0], prefix, Rational(1), out);
  return out;
}

Allocation weighted_shapley_orders(const TuGame& v, const OrderDistribution& dist) {
  if (v.n() != dist.n) throw DimensionError("order distribution does not match the game");
  Allocation x(v.n(), Rational(0));
  for (const auto& [order, prob] : dist.entries) {
    // Walk from the back: the tail after position k is already accumulated.
    Mask tail = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const Mask with = tail | (Mask{1} << *it);
      x[*it] += prob * (v[with] - v[tail]);
      tail = with;
    }
  }
  return x;
}

Allocation weighted_shapley_orders(const TuGame& v, const WeightSystem& ws) {
  require_match(v, ws);
  return weighted_shapley_orders(v, order_distribution(ws));
}

PsiTable psi_table(const TuGame& v, const WeightSystem& ws) {
  require_match(v, ws);
  const int n = v.n();
  const WeightTables wt = build_weight_tables(ws);
  PsiTable out{n, std::vector<std::vector<Rational>>(v.size(), std::vector<Rational>(n))};
  // Coalitions of equal size are independent; fill stratum by stratum.
  std::vector<std::vector<Mask>> strata(n + 1);
  for (Mask t = 1; t < v.size(); ++t) strata[Coalition(t).size()].push_back(t);
  for (int size = 1; size <= n; ++size) {
    const auto& layer = strata[size];
    parallel_for(layer.size(), [&](std::size_t idx) {
      const Mask t = layer[idx];
      std::vector<Rational>& row = out.psi[t];
      const Mask top = wt.top[t];
      for_each_player(t, [&](int i) {
        Rational acc = 0;
        if ((top >> i) & 1u) acc += ws.weight(i) * (v[t] - v[t & ~(Mask{1} << i)]);
        for_each_player(top & ~(Mask{1} << i), [&](int j) { acc += ws.weight(j) * out.psi[t & ~(Mask{1} << j)][i]; });
        row[i] = acc / wt.total[t];
      });
    });
  }
  return out;
}

Allocation weighted_shapley_recursive(const TuGame& v, const WeightSystem& ws) {
  const PsiTable table = psi_table(v, ws);
  return table.psi.back();
}

Rational gamma_coefficient(const WeightSystem& ws, Coalition s, int i) {
  return gamma_coefficient(ws, s, i, Coalition::full(ws.n()));
}

Rational gamma_coefficient(const WeightSystem& ws, Coalition s, int i, Coalition universe) {
  if (s.empty() || !s.contains(i)) throw std::invalid_argument("gamma needs a coalition containing the player");
  if (!s.subset_of(universe)) throw std::invalid_argument("gamma needs S inside the universe");
  if ((universe.mask >> ws.n()) != 0) throw DimensionError("universe exceeds the player set");
  const int ps = ws.priority_mask(s.mask);
  if (ws.priority(i) != ps) return 0;
  // Supersets that keep p(S) may only add players of priority <= p(S).
  const Mask free = universe.mask & ~s.mask & ws.at_or_below(ps);
  const Rational top_weight = ws.total_mask(s.mask);
  Rational sum = 0;
  for_each_submask(free, [&](Mask add) {
    Rational total = top_weight;
    for_each_player(add & ws.partition()[ps - 1].mask, [&](int j) { total += ws.weight(j); });
    if (Coalition(add).size() % 2 == 0) {
      sum += ws.weight(i) / total;
    } else {
      sum -= ws.weight(i) / total;
    }
  });
  return sum;
}

Allocation weighted_shapley_gamma(const TuGame& v, const WeightSystem& ws) {
  require_match(v, ws);
  const int n = v.n();
  const Coalition full = Coalition::full(n);
  Allocation x(n, Rational(0));
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t pi) {
    const int i = static_cast<int>(pi);
    Rational acc = 0;
    for (Mask s = 1; s < v.size(); ++s) {
      if (!((s >> i) & 1u)) continue;
      const Rational marginal = v[s] - v[s & ~(Mask{1} << i)];
      if (marginal == 0) continue;
      acc += gamma_coefficient(ws, Coalition(s), i, full) * marginal;
    }
    x[i] = acc;
  });
  return x;
}

Allocation weighted_myerson(const TuGame& v, const Graph& g, const WeightSystem& ws) {
  return weighted_shapley_dividends(restricted_game(v, g), ws);
}

}  // namespace coop
