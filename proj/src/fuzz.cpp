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

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <mutex>
#include <random>

#include "coop/counterexamples.hpp"
#include "coop/errors.hpp"
#include "coop/parallel.hpp"
#include "coop/structure.hpp"

namespace coop {
namespace {

std::uint64_t trial_seed(std::uint64_t seed, long trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

// Re-targets a pattern bundle to g; the pattern is induced, so the
// restriction on the witness is unchanged, but everything is re-verified.
std::optional<CounterexampleBundle> retarget(CounterexampleBundle b, const Graph& g) {
  b.graph = g;
  if (!verify_bundle(b)) return std::nullopt;
  return b;
}

// Calls visit(bundle) on each corpus bundle until it returns true.
void visit_corpus(const Graph& g, const WeightSystem& ws,
                  const std::function<bool(const CounterexampleBundle&)>& visit) {
  const std::vector<int> cycle = find_topped_cycle(g, ws);
  if (!cycle.empty() && cycle.size() >= 4) {
    std::vector<Edge> cycle_edges;
    for (std::size_t q = 0; q < cycle.size(); ++q) {
      const int a = cycle[q];
      const int b = cycle[(q + 1) % cycle.size()];
      cycle_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::vector<Edge> chords;
    for (const Edge& e : g.edges()) {
      if (std::find(cycle_edges.begin(), cycle_edges.end(), e) == cycle_edges.end()) chords.push_back(e);
    }
    auto b = retarget(noncomplete_cycle_bundle(cycle, chords, cycle[0], ws), g);
    if (b && visit(*b)) return;
  }
  for (const Pattern& p : all_induced_4paths(g)) {
    // Path p0-p1-p2-p3 read as roles 1-4-2-3.
    const Roles roles{p[0], p[2], p[3], p[1]};
    const int m = std::min(ws.priority(roles[1]), ws.priority(roles[3]));
    if (m < std::max(ws.priority(roles[0]), ws.priority(roles[2]))) continue;
    auto b = retarget(fourpath_bundle(ws, roles), g);
    if (b && visit(*b)) return;
  }
  for (const Pattern& p : all_induced_3pans(g)) {
    // Triangle p0 p1 p2 with pendant p3 at p0: role 2 = p0, role 3 = p3.
    const Roles roles{p[1], p[0], p[3], p[2]};
    const int p1 = ws.priority(roles[0]);
    const int p4 = ws.priority(roles[3]);
    if (ws.priority(roles[1]) < std::max(p1, p4) || std::max(p1, p4) < ws.priority(roles[2])) continue;
    auto b = retarget(threepan_bundle(ws, roles), g);
    if (b && visit(*b)) return;
  }
}

}  // namespace

std::vector<CounterexampleBundle> seeded_corpus(const Graph& g, const WeightSystem& ws) {
  if (g.n() != ws.n()) throw DimensionError("graph and weight system sizes differ");
  std::vector<CounterexampleBundle> out;
  visit_corpus(g, ws, [&](const CounterexampleBundle& b) {
    out.push_back(b);
    return false;
  });
  return out;
}

std::optional<FuzzWitness> preservation_fuzz(const Graph& g, const WeightSystem& ws, long trials, std::uint64_t seed,
                                             bool use_corpus) {
  if (g.n() != ws.n()) throw DimensionError("graph and weight system sizes differ");
  if (use_corpus) {
    std::optional<FuzzWitness> hit;
    visit_corpus(g, ws, [&](const CounterexampleBundle& b) {
      const Violation v = evaluate_pair(restricted_game(b.game, g), ws, b.witness_s, b.witness_t);
      hit = FuzzWitness{"corpus:" + b.family, -1, b.game, v, b};
      return true;
    });
    if (hit) return hit;
  }
  const int n = g.n();
  std::atomic<long> best{std::numeric_limits<long>::max()};
  std::mutex mu;
  std::optional<FuzzWitness> found;
  parallel_for(static_cast<std::size_t>(std::max(trials, 0L)), [&](std::size_t idx) {
    const long trial = static_cast<long>(idx);
    if (trial > best.load()) return;
    const std::uint64_t s = trial_seed(seed, trial);
    // Even trials are plain convex games, odd trials perturbed ones.
    TuGame v = trial % 2 == 0 ? random_wac_game(n, ws, s) : random_wac_game_perturbed(n, ws, s);
    const ConvexityReport report = check_weighted_average_convexity(restricted_game(v, g), ws);
    if (report.holds) return;
    std::lock_guard<std::mutex> lock(mu);
    if (trial < best.load()) {
      best = trial;
      found = FuzzWitness{"random", trial, std::move(v), report.violations.front(), std::nullopt};
    }
  });
  return found;
}

std::optional<CounterexampleBundle> search_counterexample(const Graph& g, const WeightSystem& ws, long budget,
                                                          std::uint64_t seed) {
  std::optional<FuzzWitness> hit = preservation_fuzz(g, ws, budget, seed, true);
  if (!hit) return std::nullopt;
  if (hit->bundle) return hit->bundle;
  CounterexampleBundle b{"random", hit->game, ws, g, hit->violation.s, hit->violation.t, {}};
  b.params["trial"] = Rational(static_cast<long>(hit->trial));
  if (!verify_bundle(b)) throw std::logic_error("random counterexample failed re-verification");
  return b;
}

}  // namespace coop
