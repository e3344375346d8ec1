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

#ifndef COOP_COUNTEREXAMPLES_HPP
#define COOP_COUNTEREXAMPLES_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coop/coalition.hpp"
#include "coop/convexity.hpp"
#include "coop/game.hpp"
#include "coop/graph.hpp"
#include "coop/weights.hpp"

namespace coop {

// A game that satisfies the weighted inequality, a graph whose restriction
// breaks it, and the pair where it breaks.
struct CounterexampleBundle {
  std::string family;
  TuGame game;
  WeightSystem ws;
  Graph graph;
  Coalition witness_s;
  Coalition witness_t;
  std::map<std::string, Rational> params;
};

// roles[r] is the player acting as role r+1 of the four-player pattern.
// Players outside the roles are null in the constructed game.
using Roles = std::array<int, 4>;
inline constexpr Roles kIdentityRoles{0, 1, 2, 3};

// v(S) = |S n C| - 1 on the cycle players (0 if S misses the cycle); the
// graph is the cycle plus `chords`. The cycle neighbours of lstar must not
// be adjacent and lstar must carry the highest priority on the cycle.
CounterexampleBundle noncomplete_cycle_bundle(const std::vector<int>& cycle_nodes, const std::vector<Edge>& chords,
                                              int lstar, const WeightSystem& ws);

// Requires p(2) >= max(p(1), p(4)) >= p(3) on the roles; roles 1 and 4 are
// exchanged when p(1) > p(4).
CounterexampleBundle threepan_bundle(const WeightSystem& ws, Roles roles = kIdentityRoles);

// Requires min(p(2), p(4)) >= max(p(1), p(3)); graph is the path 1-4-2-3.
CounterexampleBundle fourpath_bundle(const WeightSystem& ws, Roles roles = kIdentityRoles);

// The four-player game with parameters X, Y, Z, Theta and alpha on the
// given roles; exposed for the case tables.
TuGame threepan_game(const WeightSystem& ws, Roles roles, bool alpha, std::map<std::string, Rational>* params);
// The 0/1 game on the given roles.
TuGame fourpath_game(int n, Roles roles);

struct BundleVerification {
  bool ok = false;
  bool game_holds = false;
  std::optional<Violation> game_violation;  // first failure of the game itself
  Violation at_witness;                      // both sides of the restricted game at the witness
  bool witness_violates = false;
  std::string reason;

  explicit operator bool() const { return ok; }
};

BundleVerification verify_bundle(const CounterexampleBundle& b);

// Convex game from nonnegative dividends on |S| >= 2 and signed singleton
// dividends, all multiples of 1/2. Deterministic in the seed.
TuGame random_wac_game(int n, const WeightSystem& ws, std::uint64_t seed);

// Starts from random_wac_game and applies random single-coalition moves,
// keeping only moves after which the weighted inequality still holds. The
// result is usually not convex.
TuGame random_wac_game_perturbed(int n, const WeightSystem& ws, std::uint64_t seed, int steps = 40);

struct FuzzWitness {
  std::string source;  // "corpus:<family>" or "random"
  long trial = -1;     // random trial index, -1 for corpus entries
  TuGame game;
  Violation violation;
  std::optional<CounterexampleBundle> bundle;  // set for corpus entries
};

// Tries the pattern-based corpus (when enabled) and then `trials` random
// games; returns the first restriction that breaks the inequality.
std::optional<FuzzWitness> preservation_fuzz(const Graph& g, const WeightSystem& ws, long trials, std::uint64_t seed,
                                             bool use_corpus = true);

// Pattern bundles built from induced substructures of g, in a fixed order,
// each re-targeted to g itself. Only bundles that verify are returned.
std::vector<CounterexampleBundle> seeded_corpus(const Graph& g, const WeightSystem& ws);

std::optional<CounterexampleBundle> search_counterexample(const Graph& g, const WeightSystem& ws, long budget,
                                                          std::uint64_t seed);

}  // namespace coop

#endif  // COOP_COUNTEREXAMPLES_HPP
