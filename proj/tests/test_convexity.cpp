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

#include <doctest.h>

#include <random>

#include "coop/convexity.hpp"
#include "coop/counterexamples.hpp"
#include "coop/graph.hpp"
#include "oracles.hpp"

using namespace coop;
using oracle::c;
using oracle::m;
using oracle::q;

namespace {

TuGame size_minus_one(int n) {
  std::vector<Rational> t(std::size_t{1} << n);
  for (Mask s = 1; s < t.size(); ++s) t[s] = Coalition(s).size() - 1;
  return TuGame(n, std::move(t));
}

// Brute-force triple scan straight from the definition.
bool weak_superadditive_oracle(const TuGame& v, const WeightSystem& ws) {
  const Mask full = v.full_mask();
  auto prio = [&](Mask s) {
    int p = 0;
    for (int i = 0; i < v.n(); ++i) {
      if ((s >> i) & 1u) p = std::max(p, ws.priority(i));
    }
    return p;
  };
  for (Mask s = 1; s <= full; ++s) {
    for (Mask t = 0; t <= full; ++t) {
      if (s & t) continue;
      for (Mask u = 0; u <= full; ++u) {
        if (u & ~t) continue;
        bool guard = true;
        for (int i = 0; i < v.n(); ++i) {
          if (((s >> i) & 1u) && !(ws.priority(i) > prio(u) && ws.priority(i) >= prio(t))) guard = false;
        }
        if (guard && v[s | t] - v[t] < v[s | u] - v[u]) return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("3-pan game and its restriction at unit weights") {
  const CounterexampleBundle b = threepan_bundle(WeightSystem::uniform(4));
  CHECK(check_weighted_average_convexity(b.game, b.ws).holds);
  CHECK(check_average_convexity(b.game).holds);
  const TuGame r = restricted_game(b.game, b.graph);
  const ConvexityReport all = check_weighted_average_convexity(r, b.ws, true);
  REQUIRE(all.violations.size() == 1);
  CHECK(all.violations[0].s == c({2, 3, 4}));
  CHECK(all.violations[0].t == c({1, 2, 3, 4}));
  CHECK(all.violations[0].lhs == 17);
  CHECK(all.violations[0].rhs == 16);
  CHECK_FALSE(check_average_convexity(r).holds);
}

TEST_CASE("convex games pass under any weight system") {
  std::mt19937_64 rng(31);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 2 + rep % 4;
    TuGame v = random_wac_game(n, WeightSystem::uniform(n), rng());
    REQUIRE(is_convex(v));
    for (int k = 0; k < 50; ++k) CHECK(check_weighted_average_convexity(v, oracle::random_ws(n, rng, 3)).holds);
  }
}

TEST_CASE("scan agrees with the unskipped definition") {
  std::mt19937_64 rng(32);
  int seen_pass = 0;
  int seen_fail = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + rep % 4;
    WeightSystem ws = oracle::random_ws(n, rng, 3);
    TuGame v = rep % 2 ? oracle::random_game(n, rng) : random_wac_game_perturbed(n, ws, rng(), 10);
    const bool expect = oracle::wac_full(v, ws);
    const ConvexityReport full = check_weighted_average_convexity(v, ws, true);
    const ConvexityReport first = check_weighted_average_convexity(v, ws, false);
    CHECK(full.holds == expect);
    CHECK(first.holds == expect);
    (expect ? seen_pass : seen_fail)++;
    if (!expect) {
      REQUIRE(first.violations.size() == 1);
      CHECK(first.violations[0].t == full.violations[0].t);
      CHECK(first.violations[0].s == full.violations[0].s);
      for (std::size_t k = 1; k < full.violations.size(); ++k) {
        const auto& a = full.violations[k - 1];
        const auto& b = full.violations[k];
        CHECK((a.t.mask < b.t.mask || (a.t == b.t && a.s.mask < b.s.mask)));
      }
      for (const Violation& viol : full.violations) {
        CHECK(viol.s.subset_of(viol.t));
        CHECK(viol.s != viol.t);
        CHECK(viol.lhs > viol.rhs);
        const Violation again = evaluate_pair(v, ws, viol.s, viol.t);
        CHECK(again.lhs == viol.lhs);
        CHECK(again.rhs == viol.rhs);
      }
    }
    CHECK(check_average_convexity(v).holds == check_weighted_average_convexity(v, WeightSystem::uniform(n)).holds);
  }
  CHECK(seen_pass > 20);
  CHECK(seen_fail > 20);
}

TEST_CASE("null-player reduction gives the same verdict") {
  std::mt19937_64 rng(33);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 2 + rep % 3;
    WeightSystem ws = oracle::random_ws(n, rng, 2);
    TuGame v = rep % 2 ? oracle::random_game(n, rng) : random_wac_game_perturbed(n, ws, rng(), 10);
    // Pad with one or two null players at random priorities.
    const int extra = 1 + rep % 2;
    const int big = n + extra;
    std::vector<Rational> t(std::size_t{1} << big);
    for (Mask s = 0; s < t.size(); ++s) t[s] = v[s & v.full_mask()];
    TuGame padded(big, t);
    std::vector<Rational> w = ws.weights();
    std::vector<int> prio = ws.priorities();
    std::uniform_int_distribution<int> lv(1, ws.levels() + 1);
    for (int e = 0; e < extra; ++e) {
      w.push_back(q(1 + e, 1));
      prio.push_back(lv(rng));
    }
    std::vector<int> used(prio);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int& p : prio) p = 1 + static_cast<int>(std::lower_bound(used.begin(), used.end(), p) - used.begin());
    WeightSystem pws = WeightSystem::from_priorities(w, prio);
    const bool base = check_weighted_average_convexity(v, ws).holds;
    CHECK(check_weighted_average_convexity(padded, pws).holds == base);
    CHECK(check_with_null_player_reduction(padded, pws).holds == base);
    CHECK(check_with_null_player_reduction(v, ws).holds == base);
  }
}

TEST_CASE("core membership") {
  CHECK(core_contains(size_minus_one(3), {q(2, 3), q(2, 3), q(2, 3)}));
  CHECK_FALSE(core_contains(size_minus_one(3), {2, 0, 0}));
  CHECK(core_contains(TuGame(3), {0, 0, 0}));
  CHECK_FALSE(core_contains(TuGame(2), {1, 0}));
  CHECK_THROWS(core_contains(TuGame(2), {0}));
}

TEST_CASE("weighted value lies in the core of games passing the scan") {
  std::mt19937_64 rng(34);
  int non_convex = 0;
  for (int rep = 0; rep < 120; ++rep) {
    const int n = 3 + rep % 3;
    WeightSystem ws = oracle::random_ws(n, rng, 3);
    TuGame v = random_wac_game_perturbed(n, ws, rng(), 30);
    if (!is_convex(v)) ++non_convex;
    const Theorem1Result r = theorem1_pipeline(v, ws);
    REQUIRE(r.is_wac);
    CHECK(r.in_core);
    CHECK(r.phi == weighted_shapley_dividends(v, ws));
    if (check_average_convexity(v).holds) CHECK(core_contains(v, shapley(v)));
  }
  CHECK(non_convex > 10);
}

TEST_CASE("weak superadditivity") {
  const TuGame bad = make_game(2, {{c({1}), 1}, {c({2}), 1}, {c({1, 2}), 1}});
  const WeakSuperadditivityReport r = weak_superadditivity_holds(bad, WeightSystem::uniform(2));
  CHECK_FALSE(r.holds);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].u.empty());
  CHECK_THROWS(weak_superadditivity_holds(TuGame(13), WeightSystem::uniform(13)));

  std::mt19937_64 rng(35);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 2 + rep % 3;
    WeightSystem ws = oracle::random_ws(n, rng, 3);
    TuGame v = rep % 3 == 0 ? oracle::random_game(n, rng) : random_wac_game_perturbed(n, ws, rng(), 20);
    CHECK(weak_superadditivity_holds(v, ws).holds == weak_superadditive_oracle(v, ws));
    if (check_weighted_average_convexity(v, ws).holds) CHECK(weak_superadditivity_holds(v, ws).holds);
    // With a single level only U = {} qualifies: plain superadditivity.
    CHECK(weak_superadditivity_holds(v, WeightSystem::simple(ws.weights())).holds == is_superadditive(v));
  }
}
