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

#ifndef COOP_COALITION_HPP
#define COOP_COALITION_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace coop {

// Hard cap on the number of players. Tables are dense (2^n entries).
inline constexpr int kMaxPlayers = 16;

using Mask = std::uint32_t;

// A set of players encoded as a bit mask; bit i set iff player i (0-based)
// belongs to the coalition. The player count lives with the game.
struct Coalition {
  Mask mask = 0;

  constexpr Coalition() = default;
  constexpr explicit Coalition(Mask m) : mask(m) {}

  static Coalition of(std::initializer_list<int> players) {
    Mask m = 0;
    for (int p : players) m |= Mask{1} << p;
    return Coalition(m);
  }
  static constexpr Coalition singleton(int i) { return Coalition(Mask{1} << i); }
  static constexpr Coalition full(int n) { return Coalition((Mask{1} << n) - 1); }

  constexpr bool empty() const { return mask == 0; }
  constexpr int size() const { return std::popcount(mask); }
  constexpr bool contains(int i) const { return (mask >> i) & 1u; }
  constexpr Coalition with(int i) const { return Coalition(mask | (Mask{1} << i)); }
  constexpr Coalition without(int i) const { return Coalition(mask & ~(Mask{1} << i)); }
  constexpr bool subset_of(Coalition other) const { return (mask & ~other.mask) == 0; }
  // Index of the smallest/largest member; undefined on the empty set.
  constexpr int lowest() const { return std::countr_zero(mask); }
  constexpr int highest() const { return 31 - std::countl_zero(mask); }

  std::vector<int> players() const;

  friend constexpr Coalition operator|(Coalition a, Coalition b) { return Coalition(a.mask | b.mask); }
  friend constexpr Coalition operator&(Coalition a, Coalition b) { return Coalition(a.mask & b.mask); }
  friend constexpr Coalition operator-(Coalition a, Coalition b) { return Coalition(a.mask & ~b.mask); }
  friend constexpr bool operator==(Coalition a, Coalition b) = default;
  friend constexpr auto operator<=>(Coalition a, Coalition b) = default;
};

// Renders "{1,3,4}" using 1-based player ids.
std::string format(Coalition s);

// Calls f(i) for every member, in increasing order.
template <typename F>
void for_each_player(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// Calls f(sub) for every submask of m including m itself and 0, in
// decreasing numeric order.
template <typename F>
void for_each_submask(Mask m, F&& f) {
  Mask sub = m;
  while (true) {
    f(sub);
    if (sub == 0) break;
    sub = (sub - 1) & m;
  }
}

}  // namespace coop

#endif  // COOP_COALITION_HPP
