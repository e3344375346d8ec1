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

#ifndef COOP_GAME_HPP
#define COOP_GAME_HPP

#include <map>
#include <vector>

#include "coop/coalition.hpp"
#include "coop/rational.hpp"

namespace coop {

// Characteristic function on 2^N, stored densely by coalition mask.
// Immutable once built.
class TuGame {
 public:
  // Zero game on n players.
  explicit TuGame(int n);
  // Takes ownership of a full table; values.size() must be 2^n and
  // values[0] must be zero.
  TuGame(int n, std::vector<Rational> values);

  int n() const { return n_; }
  Mask full_mask() const { return (Mask{1} << n_) - 1; }
  std::size_t size() const { return values_.size(); }

  const Rational& operator()(Coalition s) const { return values_[s.mask]; }
  const Rational& operator[](Mask m) const { return values_[m]; }
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const TuGame& a, const TuGame& b) {
    return a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  int n_;
  std::vector<Rational> values_;
};

// Throws std::invalid_argument unless 1 <= n <= kMaxPlayers.
void check_player_count(int n);

TuGame make_game(int n, const std::map<Coalition, Rational>& entries);
TuGame unanimity_game(int n, Coalition s);

// Harsanyi dividends lambda_S, indexed by mask; lambda_0 = 0.
struct UnanimityDecomposition {
  int n = 0;
  std::vector<Rational> coefficients;

  const Rational& operator()(Coalition s) const { return coefficients[s.mask]; }
};

UnanimityDecomposition unanimity_coefficients(const TuGame& v);
TuGame game_from_coefficients(const UnanimityDecomposition& d, int n);

Rational delta(const TuGame& v, Coalition a, Coalition b);
bool is_convex(const TuGame& v);
bool is_superadditive(const TuGame& v);
Coalition null_players(const TuGame& v);

// Game induced on T with members renumbered in increasing original order;
// players[k] is the original index of new player k.
struct Subgame {
  TuGame game;
  std::vector<int> players;
};

Subgame subgame(const TuGame& v, Coalition t);

}  // namespace coop

#endif  // COOP_GAME_HPP
