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

#include "coop/counterexamples.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "coop/errors.hpp"
#include "coop/structure.hpp"

namespace coop {
namespace {

void check_roles(const WeightSystem& ws, const Roles& roles) {
  if (ws.n() < 4) throw PreconditionError("four-player patterns need at least 4 players");
  std::set<int> seen;
  for (int r : roles) {
    if (r < 0 || r >= ws.n()) throw PreconditionError("role player out of range");
    seen.insert(r);
  }
  if (seen.size() != 4) throw PreconditionError("roles must name four distinct players");
}

Mask role_mask(const Roles& roles, std::initializer_list<int> which) {
  Mask m = 0;
  for (int r : which) m |= Mask{1} << roles[r - 1];
  return m;
}

// Extends a table defined on the role players: v(S) = v4(S n roles).
TuGame lift(int n, const Roles& roles, const std::vector<std::pair<std::initializer_list<int>, Rational>>& rows) {
  std::vector<Rational> small(16, Rational(0));
  for (const auto& [members, value] : rows) {
    Mask m = 0;
    for (int r : members) m |= Mask{1} << (r - 1);
    small[m] = value;
  }
  std::vector<Rational> table(std::size_t{1} << n);
  for (Mask s = 0; s < table.size(); ++s) {
    Mask local = 0;
    for (int r = 0; r < 4; ++r) {
      if ((s >> roles[r]) & 1u) local |= Mask{1} << r;
    }
    table[s] = small[local];
  }
  return TuGame(n, std::move(table));
}

Graph role_graph(int n, const Roles& roles, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (const auto& [a, b] : edges) e.emplace_back(roles[a - 1], roles[b - 1]);
  return Graph(n, e);
}

int role_priority(const WeightSystem& ws, const Roles& roles, int r) { return ws.priority(roles[r - 1]); }

Rational halves(int a) {
  Rational r(a, 2);
  r.canonicalize();
  return r;
}

}  // namespace

TuGame threepan_game(const WeightSystem& ws, Roles roles, bool alpha, std::map<std::string, Rational>* params) {
  check_roles(ws, roles);
  const Rational& w1 = ws.weight(roles[0]);
  const Rational& w2 = ws.weight(roles[1]);
  const Rational& w3 = ws.weight(roles[2]);
  const Rational& w4 = ws.weight(roles[3]);
  const Rational a = alpha ? 1 : 0;
  const Rational x = std::max(Rational(1 + w2 / w4), Rational(1 + w3 / w4));
  const Rational y = 1 + w1 / w4;
  const Rational z = x + 2 * y + (1 - a) * (w1 * x / (w2 + w3 + w4) - w1 / w4);
  const Rational theta = z + x - 1;
  if (params) {
    (*params)["X"] = x;
    (*params)["Y"] = y;
    (*params)["Z"] = z;
    (*params)["Theta"] = theta;
    (*params)["alpha_p"] = a;
  }
  return lift(ws.n(), roles,
              {{{1, 2, 3}, a * (x - 1)},
               {{1, 4}, x},
               {{2, 4}, a * y},
               {{3, 4}, y},
               {{1, 2, 4}, x + a * (y - 1)},
               {{1, 3, 4}, x + y - 1},
               {{2, 3, 4}, z},
               {{1, 2, 3, 4}, theta}});
}

TuGame fourpath_game(int n, Roles roles) {
  return lift(n, roles,
              {{{1, 4}, 1}, {{3, 4}, 1}, {{1, 2, 4}, 1}, {{1, 3, 4}, 1}, {{2, 3, 4}, 1}, {{1, 2, 3, 4}, 1}});
}

CounterexampleBundle noncomplete_cycle_bundle(const std::vector<int>& cycle_nodes, const std::vector<Edge>& chords,
                                              int lstar, const WeightSystem& ws) {
  const int n = ws.n();
  const std::size_t len = cycle_nodes.size();
  if (len < 4) throw PreconditionError("a non-complete cycle needs at least four nodes");
  Mask cyc = 0;
  for (int v : cycle_nodes) {
    if (v < 0 || v >= n) throw PreconditionError("cycle node out of range");
    if ((cyc >> v) & 1u) throw PreconditionError("cycle nodes must be distinct");
    cyc |= Mask{1} << v;
  }
  const auto it = std::find(cycle_nodes.begin(), cycle_nodes.end(), lstar);
  if (it == cycle_nodes.end()) throw PreconditionError("lstar must lie on the cycle");
  const std::size_t pos = static_cast<std::size_t>(it - cycle_nodes.begin());
  const int j = cycle_nodes[(pos + len - 1) % len];
  const int k = cycle_nodes[(pos + 1) % len];
  std::vector<Edge> edges;
  for (std::size_t q = 0; q < len; ++q) edges.emplace_back(cycle_nodes[q], cycle_nodes[(q + 1) % len]);
  edges.insert(edges.end(), chords.begin(), chords.end());
  Graph g(n, edges);
  if (g.adjacent(j, k)) {
    throw PreconditionError("cycle neighbours " + std::to_string(j + 1) + " and " + std::to_string(k + 1) +
                            " of lstar are adjacent");
  }
  if (ws.priority(lstar) != ws.priority_mask(cyc)) {
    throw PreconditionError("lstar must have the highest priority on the cycle");
  }
  std::vector<Rational> table(std::size_t{1} << n);
  for (Mask s = 0; s < table.size(); ++s) {
    const int inside = Coalition(s & cyc).size();
    table[s] = inside == 0 ? 0 : inside - 1;
  }
  const Coalition t(cyc);
  const Coalition s = Coalition::singleton(j).with(lstar).with(k);
  CounterexampleBundle b{"cycle", TuGame(n, std::move(table)), ws, std::move(g), s, t, {}};
  const Rational wj = effective_weight(ws, t, j);
  const Rational wl = effective_weight(ws, t, lstar);
  const Rational wk = effective_weight(ws, t, k);
  b.params["lhs"] = wj + 2 * wl + wk;
  b.params["rhs"] = wj + wl + wk;
  return b;
}

CounterexampleBundle threepan_bundle(const WeightSystem& ws, Roles roles) {
  check_roles(ws, roles);
  if (role_priority(ws, roles, 1) > role_priority(ws, roles, 4)) std::swap(roles[0], roles[3]);
  const int p1 = role_priority(ws, roles, 1);
  const int p2 = role_priority(ws, roles, 2);
  const int p3 = role_priority(ws, roles, 3);
  const int p4 = role_priority(ws, roles, 4);
  if (!(p2 >= std::max(p1, p4) && std::max(p1, p4) >= p3)) {
    throw PreconditionError("3-pan needs p(2) >= max(p(1),p(4)) >= p(3); got p = (" + std::to_string(p1) + "," +
                            std::to_string(p2) + "," + std::to_string(p3) + "," + std::to_string(p4) + ")");
  }
  const bool alpha = p2 == p4 && p4 > p3;
  std::map<std::string, Rational> params;
  TuGame game = threepan_game(ws, roles, alpha, &params);
  Graph g = role_graph(ws.n(), roles, {{1, 4}, {1, 2}, {2, 4}, {2, 3}});
  return CounterexampleBundle{"threepan", std::move(game), ws, std::move(g),
                              Coalition(role_mask(roles, {2, 3, 4})), Coalition(role_mask(roles, {1, 2, 3, 4})),
                              std::move(params)};
}

CounterexampleBundle fourpath_bundle(const WeightSystem& ws, Roles roles) {
  check_roles(ws, roles);
  const int p1 = role_priority(ws, roles, 1);
  const int p2 = role_priority(ws, roles, 2);
  const int p3 = role_priority(ws, roles, 3);
  const int p4 = role_priority(ws, roles, 4);
  if (std::min(p2, p4) < std::max(p1, p3)) {
    throw PreconditionError("4-path needs min(p(2),p(4)) >= max(p(1),p(3)); got p = (" + std::to_string(p1) + "," +
                            std::to_string(p2) + "," + std::to_string(p3) + "," + std::to_string(p4) + ")");
  }
  Graph g = role_graph(ws.n(), roles, {{1, 4}, {4, 2}, {2, 3}});
  const Coalition t(role_mask(roles, {1, 2, 3, 4}));
  if (p2 == p4 && p2 > std::max(p1, p3)) {
    CounterexampleBundle b{"fourpath", fourpath_game(ws.n(), roles), ws, std::move(g),
                           Coalition(role_mask(roles, {2, 3, 4})), t, {}};
    b.params["alpha_p"] = 1;
    b.params["lhs"] = ws.weight(roles[1]) + ws.weight(roles[3]);
    b.params["rhs"] = ws.weight(roles[3]);
    return b;
  }
  // Read the path from whichever end puts the larger middle priority in
  // role 2; the 3-pan game with alpha = 0 then applies unchanged.
  const bool reverse = p4 > p2 || (p2 == p4 && p1 > p3);
  Roles game_roles = roles;
  if (reverse) game_roles = Roles{roles[2], roles[3], roles[0], roles[1]};
  std::map<std::string, Rational> params;
  TuGame game = threepan_game(ws, game_roles, false, &params);
  return CounterexampleBundle{"fourpath", std::move(game), ws, std::move(g),
                              Coalition(role_mask(game_roles, {2, 3, 4})), t, std::move(params)};
}

BundleVerification verify_bundle(const CounterexampleBundle& b) {
  BundleVerification out;
  if (b.game.n() != b.ws.n() || b.graph.n() != b.game.n()) {
    out.reason = "bundle components disagree on the player count";
    return out;
  }
  const ConvexityReport game_report = check_weighted_average_convexity(b.game, b.ws);
  out.game_holds = game_report.holds;
  if (!game_report.holds) out.game_violation = game_report.violations.front();
  const TuGame restricted = restricted_game(b.game, b.graph);
  const bool proper = !b.witness_s.empty() && b.witness_s.subset_of(b.witness_t) && b.witness_s != b.witness_t;
  out.at_witness = evaluate_pair(restricted, b.ws, b.witness_s, b.witness_t);
  out.witness_violates = proper && out.at_witness.lhs > out.at_witness.rhs;
  out.ok = out.game_holds && out.witness_violates;
  if (!out.game_holds) {
    out.reason = "game itself fails at S=" + format(out.game_violation->s) + ", T=" + format(out.game_violation->t);
  } else if (!out.witness_violates) {
    out.reason = "restricted game satisfies the inequality at the witness (lhs " + to_string(out.at_witness.lhs) +
                 ", rhs " + to_string(out.at_witness.rhs) + ")";
  }
  return out;
}

TuGame random_wac_game(int n, const WeightSystem& ws, std::uint64_t seed) {
  check_player_count(n);
  if (ws.n() != n) throw DimensionError("weight system does not match the player count");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pair_div(0, 6);
  std::uniform_int_distribution<int> single_div(-4, 4);
  std::bernoulli_distribution sparse(0.5);
  UnanimityDecomposition d{n, std::vector<Rational>(std::size_t{1} << n, Rational(0))};
  for (Mask s = 1; s < d.coefficients.size(); ++s) {
    if (Coalition(s).size() == 1) {
      d.coefficients[s] = halves(single_div(rng));
    } else if (sparse(rng)) {
      d.coefficients[s] = halves(pair_div(rng));
    }
  }
  TuGame v = game_from_coefficients(d, n);
  if (n <= 8 && !is_convex(v)) throw std::logic_error("nonnegative dividends produced a non-convex game");
  return v;
}

TuGame random_wac_game_perturbed(int n, const WeightSystem& ws, std::uint64_t seed, int steps) {
  TuGame v = random_wac_game(n, ws, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<Mask> pick(1, v.full_mask());
  std::uniform_int_distribution<int> amount(-4, 4);
  std::vector<Rational> table = v.values();
  for (int step = 0; step < steps; ++step) {
    const Mask s = pick(rng);
    const int a = amount(rng);
    if (a == 0) continue;
    const Rational old = table[s];
    table[s] += halves(a);
    TuGame candidate(n, table);
    if (!check_weighted_average_convexity(candidate, ws).holds) table[s] = old;
  }
  return TuGame(n, std::move(table));
}

}  // namespace coop
