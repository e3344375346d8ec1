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

// Bullet-by-bullet inequalities for the 3-pan game (parameters X, Y, Z,
// Theta, alpha) and for the 0/1 4-path game. Each case carries both sides
// as derived by hand; callers compare them with evaluate_pair.
#ifndef COOP_TESTS_CASE_TABLES_HPP
#define COOP_TESTS_CASE_TABLES_HPP

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "coop/convexity.hpp"
#include "coop/counterexamples.hpp"
#include "oracles.hpp"

namespace cases {

using namespace coop;

struct Case {
  std::string name;
  Coalition s;
  Coalition t;
  Rational lhs;
  Rational rhs;
};

// Priorities may skip values; they are compressed to consecutive levels.
inline WeightSystem ws_of(std::vector<Rational> w, std::vector<int> prio) {
  std::vector<int> used(prio);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (int& p : prio) p = 1 + static_cast<int>(std::lower_bound(used.begin(), used.end(), p) - used.begin());
  return WeightSystem::from_priorities(std::move(w), prio);
}

inline std::vector<Rational> random_weights(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(1, 6);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> w;
  for (int i = 0; i < n; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    w.push_back(r);
  }
  return w;
}

// All priority vectors over {1,2,3} on four players.
inline std::vector<std::vector<int>> all_priorities() {
  std::vector<std::vector<int>> out;
  for (int code = 0; code < 81; ++code) {
    std::vector<int> p;
    int x = code;
    for (int i = 0; i < 4; ++i) {
      p.push_back(1 + x % 3);
      x /= 3;
    }
    out.push_back(p);
  }
  return out;
}

// Configurations of the 3-pan analysis: p(2) >= p(4) >= max(p(1), p(3)).
inline bool pan_admissible(const std::vector<int>& p) { return p[1] >= p[3] && p[3] >= p[0] && p[3] >= p[2]; }
// Configurations of the strict 4-path game: p(2) = p(4) > max(p(1), p(3)).
inline bool strict_path_admissible(const std::vector<int>& p) {
  return p[1] == p[3] && p[1] > std::max(p[0], p[2]);
}

inline bool pan_alpha(const WeightSystem& ws) {
  return ws.priority(1) == ws.priority(3) && ws.priority(3) > ws.priority(2);
}

inline TuGame pan_case_game(const WeightSystem& ws) { return threepan_game(ws, kIdentityRoles, pan_alpha(ws), nullptr); }

inline std::vector<Case> pan_cases(const WeightSystem& ws) {
  std::map<std::string, Rational> p;
  const TuGame v = threepan_game(ws, kIdentityRoles, pan_alpha(ws), &p);
  const Rational x = p.at("X"), y = p.at("Y"), z = p.at("Z"), th = p.at("Theta"), a = p.at("alpha_p");
  auto w = [&](Coalition t, int role) { return effective_weight(ws, t, role - 1); };
  using oracle::c;
  const Coalition n4 = Coalition::full(4);
  std::vector<Case> out;
  for (Mask s : {oracle::m({1}), oracle::m({2}), oracle::m({3}), oracle::m({4}), oracle::m({1, 2}),
                 oracle::m({1, 3}), oracle::m({2, 3})}) {
    for (Mask t = s + 1; t < 16; ++t) {
      if ((s & t) != s) continue;
      // Monotone game, zero-valued S: the right side is a sum of
      // nonnegative marginals.
      Rational rhs = 0;
      for_each_player(s, [&](int i) { rhs += effective_weight(ws, Coalition(t), i) * (v[t] - v[t & ~(Mask{1} << i)]); });
      out.push_back({"zero-valued S", Coalition(s), Coalition(t), 0, rhs});
    }
  }
  {
    const Coalition t = c({1, 2, 4});
    out.push_back({"S={1,4}, T={1,2,4}", c({1, 4}), t, (w(t, 1) + w(t, 4)) * x,
                   (w(t, 1) + w(t, 4)) * x + a * w(t, 4) * y - a * (w(t, 1) + w(t, 4))});
  }
  {
    const Coalition t = c({1, 3, 4});
    out.push_back({"S={1,4}, T={1,3,4}", c({1, 4}), t, (w(t, 1) + w(t, 4)) * x,
                   (w(t, 1) + w(t, 4)) * x + w(t, 4) * y - (w(t, 1) + w(t, 4))});
  }
  out.push_back({"S={1,4}, T=N", c({1, 4}), n4, (w(n4, 1) + w(n4, 4)) * x,
                 w(n4, 1) * (x - 1) + w(n4, 4) * (z + (1 - a) * (x - 1))});
  {
    const Coalition t = c({1, 2, 4});
    out.push_back({"S={2,4}, T={1,2,4}", c({2, 4}), t, a * (w(t, 2) + w(t, 4)) * y,
                   a * (w(t, 2) + w(t, 4)) * y + w(t, 4) * x - a * (w(t, 2) + w(t, 4))});
  }
  {
    const Coalition t = c({2, 3, 4});
    out.push_back({"S={2,4}, T={2,3,4}", c({2, 4}), t, a * (w(t, 2) + w(t, 4)) * y, w(t, 2) * (z - y) + w(t, 4) * z});
  }
  out.push_back({"S={2,4}, T=N", c({2, 4}), n4, a * (w(n4, 2) + w(n4, 4)) * y,
                 w(n4, 2) * (z - y) + w(n4, 4) * (z + (1 - a) * (x - 1))});
  {
    const Coalition t = c({1, 3, 4});
    out.push_back({"S={3,4}, T={1,3,4}", c({3, 4}), t, (w(t, 3) + w(t, 4)) * y,
                   (w(t, 3) + w(t, 4)) * y + w(t, 4) * x - (w(t, 3) + w(t, 4))});
  }
  {
    const Coalition t = c({2, 3, 4});
    out.push_back({"S={3,4}, T={2,3,4}", c({3, 4}), t, (w(t, 3) + w(t, 4)) * y, w(t, 3) * (z - a * y) + w(t, 4) * z});
  }
  out.push_back({"S={3,4}, T=N", c({3, 4}), n4, (w(n4, 3) + w(n4, 4)) * y,
                 w(n4, 3) * (z - 1 - a * (y - 1)) + w(n4, 4) * (z + (1 - a) * (x - 1))});
  out.push_back({"S={1,2,3}, T=N", c({1, 2, 3}), n4, a * (w(n4, 1) + w(n4, 2) + w(n4, 3)) * (x - 1),
                 w(n4, 1) * (th - z) + w(n4, 2) * (z - y) + w(n4, 3) * (z - 1 - a * (y - 1))});
  out.push_back({"S={1,2,4}, T=N", c({1, 2, 4}), n4,
                 w(n4, 1) * (x - a) + a * w(n4, 2) * (y - 1) + w(n4, 4) * (x + a * (y - 1)),
                 w(n4, 1) * (x - 1) + w(n4, 2) * (z - y) + w(n4, 4) * (z + (1 - a) * (x - 1))});
  out.push_back({"S={1,3,4}, T=N", c({1, 3, 4}), n4, w(n4, 1) * (x - 1) + w(n4, 3) * (y - 1) + w(n4, 4) * (x + y - 1),
                 w(n4, 1) * (x - 1) + w(n4, 3) * (z - 1 - a * (y - 1)) + w(n4, 4) * (z + (1 - a) * (x - 1))});
  {
    const Rational lhs = w(n4, 2) * (z - y) + w(n4, 3) * (z - a * y) + w(n4, 4) * z;
    out.push_back({"S={2,3,4}, T=N", c({2, 3, 4}), n4, lhs, lhs - w(n4, 3) * (1 - a) + w(n4, 4) * (1 - a) * (x - 1)});
  }
  return out;
}

inline std::vector<Case> path_cases(const WeightSystem& ws) {
  auto w = [&](Coalition t, int role) { return effective_weight(ws, t, role - 1); };
  using oracle::c;
  const Coalition n4 = Coalition::full(4);
  std::vector<Case> out;
  for (Mask s : {oracle::m({1}), oracle::m({2}), oracle::m({3}), oracle::m({4}), oracle::m({1, 2}),
                 oracle::m({1, 3}), oracle::m({2, 3}), oracle::m({2, 4}), oracle::m({1, 2, 3})}) {
    const TuGame v = fourpath_game(4, kIdentityRoles);
    for (Mask t = s + 1; t < 16; ++t) {
      if ((s & t) != s) continue;
      Rational rhs = 0;
      for_each_player(s, [&](int i) { rhs += effective_weight(ws, Coalition(t), i) * (v[t] - v[t & ~(Mask{1} << i)]); });
      out.push_back({"zero-valued S", Coalition(s), Coalition(t), 0, rhs});
    }
  }
  // w(T,1) and w(T,3) vanish whenever 4 is in T.
  for (Coalition t : {c({1, 2, 4}), c({1, 3, 4}), n4}) {
    out.push_back({"S={1,4}, T=" + format(t), c({1, 4}), t, w(t, 1) + w(t, 4), w(t, 4)});
  }
  for (Coalition t : {c({1, 3, 4}), c({2, 3, 4}), n4}) {
    out.push_back({"S={3,4}, T=" + format(t), c({3, 4}), t, w(t, 3) + w(t, 4), w(t, 4)});
  }
  out.push_back({"S={1,2,4}, T=N", c({1, 2, 4}), n4, w(n4, 4), w(n4, 4)});
  out.push_back({"S={1,3,4}, T=N", c({1, 3, 4}), n4, w(n4, 4), w(n4, 4)});
  out.push_back({"S={2,3,4}, T=N", c({2, 3, 4}), n4, w(n4, 3) + w(n4, 4), w(n4, 4)});
  return out;
}

// Empty when the case holds, otherwise a description of the mismatch.
inline std::string check_case(const TuGame& v, const WeightSystem& ws, const Case& k) {
  const Violation got = evaluate_pair(v, ws, k.s, k.t);
  if (got.lhs != k.lhs) return k.name + ": lhs " + to_string(got.lhs) + " != derived " + to_string(k.lhs);
  if (got.rhs != k.rhs) return k.name + ": rhs " + to_string(got.rhs) + " != derived " + to_string(k.rhs);
  if (got.lhs > got.rhs) return k.name + ": inequality fails";
  return {};
}

}  // namespace cases

#endif  // COOP_TESTS_CASE_TABLES_HPP
