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

#include "coop/graph.hpp"

#include <stdexcept>
#include <string>

#include "coop/errors.hpp"
#include "coop/parallel.hpp"

namespace coop {

Graph::Graph(int n) {
  check_player_count(n);
  adj_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw DimensionError("edge {" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                           "} outside node range 1.." + std::to_string(n));
    }
    if (a == b) throw std::invalid_argument("self-loop at node " + std::to_string(a + 1));
    if (adjacent(a, b)) {
      throw std::invalid_argument("repeated edge {" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}");
    }
    adj_[a] |= Mask{1} << b;
    adj_[b] |= Mask{1} << a;
  }
}

Graph Graph::complete(int n) {
  Graph g(n);
  const Mask full = (Mask{1} << n) - 1;
  for (int i = 0; i < n; ++i) g.adj_[i] = full & ~(Mask{1} << i);
  return g;
}

Graph Graph::path(const std::vector<int>& nodes, int n) {
  std::vector<Edge> e;
  for (std::size_t k = 1; k < nodes.size(); ++k) e.emplace_back(nodes[k - 1], nodes[k]);
  return Graph(n, e);
}

Graph Graph::cycle(const std::vector<int>& nodes, int n) {
  if (nodes.size() < 3) throw std::invalid_argument("a cycle needs at least three nodes");
  std::vector<Edge> e;
  for (std::size_t k = 0; k < nodes.size(); ++k) e.emplace_back(nodes[k], nodes[(k + 1) % nodes.size()]);
  return Graph(n, e);
}

Graph Graph::star(int center, int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) {
    if (i != center) e.emplace_back(center, i);
  }
  return Graph(n, e);
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (Mask m : adj_) twice += std::popcount(m);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < n(); ++i) {
    for_each_player(adj_[i] >> (i + 1), [&](int d) { out.emplace_back(i, i + 1 + d); });
  }
  return out;
}

Graph Graph::induced(Coalition s) const {
  Graph g(n());
  for (int i = 0; i < n(); ++i) {
    if (s.contains(i)) g.adj_[i] = adj_[i] & s.mask;
  }
  return g;
}

Mask component_of(const Graph& g, Mask s, int start) {
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for_each_player(frontier, [&](int u) { next |= g.neighbors(u); });
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g, Coalition s) {
  if (s.empty()) return true;
  return component_of(g, s.mask, s.lowest()) == s.mask;
}

std::vector<Coalition> induced_components(const Graph& g, Coalition s) {
  if (s.mask >> g.n()) throw DimensionError("coalition exceeds node set");
  std::vector<Coalition> out;
  Mask rest = s.mask;
  while (rest) {
    const Mask c = component_of(g, s.mask, std::countr_zero(rest));
    out.emplace_back(c);
    rest &= ~c;
  }
  return out;
}

namespace {

void require_same_size(const TuGame& v, const Graph& g) {
  if (v.n() != g.n()) {
    throw DimensionError("game has " + std::to_string(v.n()) + " players but graph has " +
                         std::to_string(g.n()) + " nodes");
  }
}

}  // namespace

TuGame restricted_game(const TuGame& v, const Graph& g) {
  require_same_size(v, g);
  std::vector<Rational> table(v.size());
  // v^G(S) = v(C) + v^G(S \ C) where C is the component of S's highest
  // member; S \ C is numerically smaller than S, so one ascending pass works.
  for (Mask s = 1; s < table.size(); ++s) {
    const Mask c = component_of(g, s, Coalition(s).highest());
    table[s] = v[c] + table[s & ~c];
  }
  return TuGame(v.n(), std::move(table));
}

TuGame restricted_game_bfs(const TuGame& v, const Graph& g) {
  require_same_size(v, g);
  std::vector<Rational> table(v.size());
  parallel_for(table.size(), [&](std::size_t s) {
    Rational sum = 0;
    for (const Coalition& c : induced_components(g, Coalition(static_cast<Mask>(s)))) sum += v(c);
    table[s] = sum;
  });
  return TuGame(v.n(), std::move(table));
}

}  // namespace coop
