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

#include "coop/game.hpp"

#include <stdexcept>
#include <string>

#include "coop/errors.hpp"

namespace coop {

void check_player_count(int n) {
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("player count must be in 1.." + std::to_string(kMaxPlayers) +
                                ", got " + std::to_string(n));
  }
}

TuGame::TuGame(int n) : n_(n) {
  check_player_count(n);
  values_.assign(std::size_t{1} << n, Rational(0));
}

TuGame::TuGame(int n, std::vector<Rational> values) : n_(n), values_(std::move(values)) {
  check_player_count(n);
  if (values_.size() != (std::size_t{1} << n)) {
    throw DimensionError("value table has " + std::to_string(values_.size()) + " entries, expected 2^" +
                         std::to_string(n));
  }
  if (values_[0] != 0) throw std::invalid_argument("v(empty) must be 0");
}

TuGame make_game(int n, const std::map<Coalition, Rational>& entries) {
  check_player_count(n);
  std::vector<Rational> table(std::size_t{1} << n, Rational(0));
  const Mask full = (Mask{1} << n) - 1;
  for (const auto& [s, value] : entries) {
    if ((s.mask & ~full) != 0) {
      throw DimensionError("coalition " + format(s) + " does not fit in " + std::to_string(n) + " players");
    }
    if (s.empty() && value != 0) throw std::invalid_argument("v(empty) must be 0");
    table[s.mask] = value;
  }
  return TuGame(n, std::move(table));
}

TuGame unanimity_game(int n, Coalition s) {
  check_player_count(n);
  if (s.empty()) throw std::invalid_argument("unanimity game needs a nonempty carrier");
  if ((s.mask >> n) != 0) throw DimensionError("carrier does not fit in " + std::to_string(n) + " players");
  std::vector<Rational> table(std::size_t{1} << n, Rational(0));
  for (Mask a = 0; a < table.size(); ++a) {
    if ((a & s.mask) == s.mask) table[a] = 1;
  }
  return TuGame(n, std::move(table));
}

// Both transforms run one pass per player over the table (O(n 2^n)).
UnanimityDecomposition unanimity_coefficients(const TuGame& v) {
  std::vector<Rational> c = v.values();
  const int n = v.n();
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask a = 0; a < c.size(); ++a) {
      if (a & bit) c[a] -= c[a ^ bit];
    }
  }
  return UnanimityDecomposition{n, std::move(c)};
}

TuGame game_from_coefficients(const UnanimityDecomposition& d, int n) {
  check_player_count(n);
  if (d.coefficients.size() != (std::size_t{1} << n)) {
    throw DimensionError("coefficient table does not match player count");
  }
  if (d.coefficients[0] != 0) throw std::invalid_argument("lambda of the empty coalition must be 0");
  std::vector<Rational> t = d.coefficients;
  for (int i = 0; i < n; ++i) {
    const Mask bit = Mask{1} << i;
    for (Mask a = 0; a < t.size(); ++a) {
      if (a & bit) t[a] += t[a ^ bit];
    }
  }
  return TuGame(n, std::move(t));
}

Rational delta(const TuGame& v, Coalition a, Coalition b) {
  return v(a | b) + v(a & b) - v(a) - v(b);
}

bool is_convex(const TuGame& v) {
  const Mask limit = v.full_mask() + 1;
  // delta is symmetric and zero on A == B.
  for (Mask a = 0; a < limit; ++a) {
    for (Mask b = a + 1; b < limit; ++b) {
      if (delta(v, Coalition(a), Coalition(b)) < 0) return false;
    }
  }
  return true;
}

bool is_superadditive(const TuGame& v) {
  const Mask full = v.full_mask();
  for (Mask a = 1; a <= full; ++a) {
    const Mask rest = full & ~a;
    // b ranges over nonempty submasks of the complement; b > a avoids
    // visiting each unordered pair twice.
    for (Mask b = rest; b != 0; b = (b - 1) & rest) {
      if (b < a) continue;
      if (v[a | b] < v[a] + v[b]) return false;
    }
  }
  return true;
}

Coalition null_players(const TuGame& v) {
  Mask out = 0;
  const Mask full = v.full_mask();
  for (int i = 0; i < v.n(); ++i) {
    const Mask bit = Mask{1} << i;
    bool null = true;
    for (Mask s = 0; s <= full && null; ++s) {
      if (!(s & bit) && v[s | bit] != v[s]) null = false;
    }
    if (null) out |= bit;
  }
  return Coalition(out);
}

Subgame subgame(const TuGame& v, Coalition t) {
  if (t.empty()) throw std::invalid_argument("subgame needs a nonempty player set");
  if ((t.mask & ~v.full_mask()) != 0) throw DimensionError("subgame set exceeds the player set");
  std::vector<int> players = t.players();
  const int k = static_cast<int>(players.size());
  std::vector<Rational> table(std::size_t{1} << k);
  for (Mask s = 0; s < table.size(); ++s) {
    Mask orig = 0;
    for_each_player(s, [&](int j) { orig |= Mask{1} << players[j]; });
    table[s] = v[orig];
  }
  return Subgame{TuGame(k, std::move(table)), std::move(players)};
}

}  // namespace coop
