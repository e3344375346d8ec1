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

#include "coop/weights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "coop/errors.hpp"
#include "coop/game.hpp"

namespace coop {

WeightSystem::WeightSystem(std::vector<Rational> weights, std::vector<Coalition> partition)
    : weights_(std::move(weights)), partition_(std::move(partition)) {
  const int n = static_cast<int>(weights_.size());
  check_player_count(n);
  for (int i = 0; i < n; ++i) {
    if (weights_[i] <= 0) {
      throw std::invalid_argument("weight of player " + std::to_string(i + 1) + " must be positive");
    }
  }
  if (partition_.empty()) throw std::invalid_argument("partition must have at least one block");
  priority_.assign(n, 0);
  const Mask full = (Mask{1} << n) - 1;
  Mask seen = 0;
  for (std::size_t k = 0; k < partition_.size(); ++k) {
    const Mask block = partition_[k].mask;
    if (block == 0) throw std::invalid_argument("partition blocks must be nonempty");
    if (block & ~full) throw DimensionError("partition block " + format(partition_[k]) + " exceeds player set");
    if (block & seen) throw std::invalid_argument("partition blocks must be disjoint");
    seen |= block;
    for_each_player(block, [&](int i) { priority_[i] = static_cast<int>(k) + 1; });
  }
  if (seen != full) throw std::invalid_argument("partition must cover every player");
  at_or_below_.assign(partition_.size() + 1, 0);
  for (std::size_t k = 1; k <= partition_.size(); ++k) {
    at_or_below_[k] = at_or_below_[k - 1] | partition_[k - 1].mask;
  }
}

WeightSystem WeightSystem::simple(std::vector<Rational> weights) {
  const int n = static_cast<int>(weights.size());
  check_player_count(n);
  return WeightSystem(std::move(weights), {Coalition::full(n)});
}

WeightSystem WeightSystem::uniform(int n) {
  check_player_count(n);
  return simple(std::vector<Rational>(n, Rational(1)));
}

WeightSystem WeightSystem::from_priorities(std::vector<Rational> weights, const std::vector<int>& priority) {
  if (priority.size() != weights.size()) throw DimensionError("priority and weight vectors differ in length");
  int m = 0;
  for (int p : priority) {
    if (p < 1) throw std::invalid_argument("priorities are 1-based");
    m = std::max(m, p);
  }
  std::vector<Coalition> partition(m);
  for (std::size_t i = 0; i < priority.size(); ++i) {
    partition[priority[i] - 1] = partition[priority[i] - 1].with(static_cast<int>(i));
  }
  return WeightSystem(std::move(weights), std::move(partition));
}

WeightSystem WeightSystem::restricted(Coalition t) const {
  if (t.empty()) throw std::invalid_argument("restriction needs a nonempty player set");
  std::vector<int> players = t.players();
  std::vector<Rational> w;
  std::vector<Coalition> parts;
  for (const Coalition& block : partition_) {
    Coalition nb;
    for (std::size_t k = 0; k < players.size(); ++k) {
      if (block.contains(players[k])) nb = nb.with(static_cast<int>(k));
    }
    if (!nb.empty()) parts.push_back(nb);
  }
  for (int p : players) w.push_back(weights_[p]);
  return WeightSystem(std::move(w), std::move(parts));
}

int WeightSystem::priority_mask(Mask s) const {
  int k = levels();
  while (k > 0 && (s & partition_[k - 1].mask) == 0) --k;
  return k;
}

Mask WeightSystem::top_mask(Mask s) const {
  const int k = priority_mask(s);
  return k == 0 ? 0 : (s & partition_[k - 1].mask);
}

Rational WeightSystem::total_mask(Mask s) const {
  Rational out = 0;
  for_each_player(top_mask(s), [&](int i) { out += weights_[i]; });
  return out;
}

namespace {

void require_nonempty(Coalition s, const char* what) {
  if (s.empty()) throw std::invalid_argument(std::string(what) + " of the empty coalition is undefined");
}

void require_fits(const WeightSystem& ws, Coalition s) {
  if (s.mask >> ws.n()) throw DimensionError("coalition " + format(s) + " exceeds player set");
}

}  // namespace

int priority_of(const WeightSystem& ws, Coalition s) {
  require_nonempty(s, "priority");
  require_fits(ws, s);
  return ws.priority_mask(s.mask);
}

Coalition top_set(const WeightSystem& ws, Coalition s) {
  require_nonempty(s, "top set");
  require_fits(ws, s);
  return Coalition(ws.top_mask(s.mask));
}

Rational effective_weight(const WeightSystem& ws, Coalition s, int i) {
  require_fits(ws, s);
  if (!s.contains(i)) return 0;
  return (ws.top_mask(s.mask) >> i) & 1u ? ws.weight(i) : Rational(0);
}

Rational effective_total(const WeightSystem& ws, Coalition s) {
  require_nonempty(s, "effective total");
  require_fits(ws, s);
  return ws.total_mask(s.mask);
}

WeightTables build_weight_tables(const WeightSystem& ws) {
  const std::size_t size = std::size_t{1} << ws.n();
  WeightTables t;
  t.priority.assign(size, 0);
  t.top.assign(size, 0);
  t.total.assign(size, Rational(0));
  // Grow each set from the one without its highest-index member.
  for (Mask s = 1; s < size; ++s) {
    const int h = Coalition(s).highest();
    const Mask rest = s & ~(Mask{1} << h);
    const int ph = ws.priority(h);
    if (rest == 0 || ph > t.priority[rest]) {
      t.priority[s] = ph;
      t.top[s] = Mask{1} << h;
      t.total[s] = ws.weight(h);
    } else if (ph == t.priority[rest]) {
      t.priority[s] = ph;
      t.top[s] = t.top[rest] | (Mask{1} << h);
      t.total[s] = t.total[rest] + ws.weight(h);
    } else {
      t.priority[s] = t.priority[rest];
      t.top[s] = t.top[rest];
      t.total[s] = t.total[rest];
    }
  }
  return t;
}

}  // namespace coop
