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

#ifndef COOP_GRAPH_HPP
#define COOP_GRAPH_HPP

#include <utility>
#include <vector>

#include "coop/coalition.hpp"
#include "coop/game.hpp"

namespace coop {

using Edge = std::pair<int, int>;

// Simple undirected graph on nodes 0..n-1 (same indexing as players).
class Graph {
 public:
  explicit Graph(int n);
  // Rejects self-loops, repeated edges and out-of-range endpoints.
  Graph(int n, const std::vector<Edge>& edges);

  static Graph complete(int n);
  static Graph path(const std::vector<int>& nodes, int n);
  static Graph cycle(const std::vector<int>& nodes, int n);
  static Graph star(int center, int n);

  int n() const { return static_cast<int>(adj_.size()); }
  Mask neighbors(int i) const { return adj_[i]; }
  bool adjacent(int i, int j) const { return (adj_[i] >> j) & 1u; }
  int degree(int i) const { return std::popcount(adj_[i]); }
  std::size_t edge_count() const;
  // Sorted (i < j) edge list.
  std::vector<Edge> edges() const;

  // Graph induced on the members of s (same node numbering).
  Graph induced(Coalition s) const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  std::vector<Mask> adj_;
};

// Component of `start` inside s, using only edges with both ends in s.
Mask component_of(const Graph& g, Mask s, int start);
bool is_connected(const Graph& g, Coalition s);

// Connected components of the graph induced on s, ordered by lowest member.
std::vector<Coalition> induced_components(const Graph& g, Coalition s);

// Myerson restriction, built incrementally from smaller coalitions.
TuGame restricted_game(const TuGame& v, const Graph& g);
// Same table by one breadth-first search per coalition; slower, kept as an
// oracle for the incremental version.
TuGame restricted_game_bfs(const TuGame& v, const Graph& g);

}  // namespace coop

#endif  // COOP_GRAPH_HPP
