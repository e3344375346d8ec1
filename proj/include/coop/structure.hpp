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

#ifndef COOP_STRUCTURE_HPP
#define COOP_STRUCTURE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coop/coalition.hpp"
#include "coop/graph.hpp"
#include "coop/weights.hpp"

namespace coop {

using Pattern = std::array<int, 4>;

struct CycleCheck {
  bool ok = true;
  // A cycle (consecutive nodes adjacent, last back to first) whose node set
  // is not complete.
  std::vector<int> cycle;
};

CycleCheck is_cycle_complete(const Graph& g);

// A cycle j, i, ..., k whose top node j has non-adjacent cycle neighbours
// i and k, all nodes having priority <= p(j). Empty if none exists.
std::vector<int> find_topped_cycle(const Graph& g, const WeightSystem& ws);

// Every induced 4-path (each unordered path once, i < l) and every induced
// 3-pan (j < k), in lexicographic order.
std::vector<Pattern> all_induced_4paths(const Graph& g);
std::vector<Pattern> all_induced_3pans(const Graph& g);

// (i,j,k,l) with edges ij, jk, kl and no other edge among the four.
std::optional<Pattern> find_induced_4path(const Graph& g);
// (i,j,k,l) with triangle ijk, pendant edge li, and no other edge.
std::optional<Pattern> find_induced_3pan(const Graph& g);

struct ComponentClass {
  bool complete = false;
  bool star = false;
  Mask centers = 0;  // every node that can serve as star center
};

ComponentClass classify_component(const Graph& g, Coalition component);

// Every connected component is complete or a star.
bool singleton_characterization(const Graph& g);

// Graph on the same node ids keeping only edges between priority-k players.
Graph layer_subgraph(const Graph& g, const WeightSystem& ws, int k);

struct ConditionCheck {
  bool ok = true;
  std::vector<int> witness;
  std::string reason;
};

struct StructureDiagnosis {
  ConditionCheck cycle_complete;       // cycles topped by one of their nodes
  ConditionCheck layer_star_complete;  // each layer is stars and cliques
  ConditionCheck higher_link;          // links into a higher layer
  ConditionCheck multi_component;      // several lower components on one higher one
  std::vector<int> failing_layers;     // priorities whose layer is neither

  bool all_ok() const {
    return cycle_complete.ok && layer_star_complete.ok && higher_link.ok && multi_component.ok;
  }
};

StructureDiagnosis necessary_conditions(const Graph& g, const WeightSystem& ws);

// A node r such that g is a tree and priorities never increase along paths
// away from r. Among valid roots the one of largest degree is returned, ties
// going to the smallest index.
std::optional<int> is_priority_decreasing_tree(const Graph& g, const WeightSystem& ws);

struct StarLevel {
  int priority = 0;  // k_l
  int center = 0;    // c_l
  Coalition nodes;   // N_l
  std::optional<Edge> bridge;  // e_l = (c_l, node of priority k_{l+1})
};

struct HierarchyResult {
  bool holds = false;
  std::vector<StarLevel> chain;
  std::string reason;
};

// Throws PreconditionError unless g is a priority-decreasing tree.
HierarchyResult hierarchy_characterization(const Graph& g, const WeightSystem& ws);

enum class Verdict { preserved, not_preserved, unknown };

struct Diagnosis {
  StructureDiagnosis conditions;
  bool single_priority = false;
  std::optional<bool> singleton;  // set when there is one priority level
  std::optional<int> tree_root;
  std::optional<HierarchyResult> hierarchy;
  Verdict verdict = Verdict::unknown;
};

Diagnosis diagnose(const Graph& g, const WeightSystem& ws);

const char* to_string(Verdict v);

}  // namespace coop

#endif  // COOP_STRUCTURE_HPP
