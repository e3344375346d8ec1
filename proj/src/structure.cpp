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

#include "coop/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "coop/errors.hpp"

namespace coop {
namespace {

std::string node_list(const std::vector<int>& nodes) {
  std::string out = "(";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(nodes[k] + 1);
  }
  return out + ")";
}

// Shortest path from `from` to `to` through `allowed` (both ends included),
// or empty if none.
std::vector<int> bfs_path(const Graph& g, Mask allowed, int from, int to) {
  std::vector<int> parent(g.n(), -1);
  Mask seen = Mask{1} << from;
  std::vector<int> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    if (u == to) break;
    for_each_player(g.neighbors(u) & allowed & ~seen, [&](int w) {
      seen |= Mask{1} << w;
      parent[w] = u;
      queue.push_back(w);
    });
  }
  if (!((seen >> to) & 1u)) return {};
  std::vector<int> path;
  for (int u = to; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

// A node j, two non-adjacent neighbours i, k with p(i), p(k) <= p(j), joined
// by a path avoiding j through nodes of priority <= p(j). Returns the cycle
// j, i, ..., k.
std::vector<int> topped_cycle_failure(const Graph& g, const std::vector<int>& prio) {
  const int n = g.n();
  for (int j = 0; j < n; ++j) {
    Mask low = 0;
    for (int v = 0; v < n; ++v) {
      if (v != j && prio[v] <= prio[j]) low |= Mask{1} << v;
    }
    const Mask nb = g.neighbors(j) & low;
    for (int i = 0; i < n; ++i) {
      if (!((nb >> i) & 1u)) continue;
      for (int k = i + 1; k < n; ++k) {
        if (!((nb >> k) & 1u) || g.adjacent(i, k)) continue;
        std::vector<int> path = bfs_path(g, low, i, k);
        if (path.empty()) continue;
        std::vector<int> cycle{j};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return cycle;
      }
    }
  }
  return {};
}

Mask layer_mask(const WeightSystem& ws, int k) { return ws.partition()[k - 1].mask; }

struct LayerComponent {
  Mask nodes;
  int layer;
};

bool linked(const Graph& g, Mask a, Mask b) {
  bool out = false;
  for_each_player(a, [&](int x) { out = out || (g.neighbors(x) & b) != 0; });
  return out;
}

Mask neighborhood(const Graph& g, Mask a) {
  Mask out = 0;
  for_each_player(a, [&](int x) { out |= g.neighbors(x); });
  return out & ~a;
}

void fail(ConditionCheck& check, std::vector<int> witness, std::string reason) {
  if (!check.ok) return;
  check.ok = false;
  check.witness = std::move(witness);
  check.reason = std::move(reason);
}

void check_pair(const Graph& g, const WeightSystem& ws, const std::vector<LayerComponent>& comps,
                std::size_t ci, std::size_t c1i, std::size_t c2i, ConditionCheck& check) {
  const LayerComponent& cc = comps[ci];
  const LayerComponent& c1 = comps[c1i];
  const LayerComponent& c2 = comps[c2i];
  const Mask n1 = neighborhood(g, c1.nodes);
  const Mask n2 = neighborhood(g, c2.nodes);
  const std::string names = format(Coalition(c1.nodes)) + " and " + format(Coalition(c2.nodes)) + " below " +
                            format(Coalition(cc.nodes));
  if ((n1 & n2 & cc.nodes) == 0) {
    const int i1 = Coalition(n1 & cc.nodes).lowest();
    const int i2 = Coalition(n2 & cc.nodes).lowest();
    const int j1 = Coalition(g.neighbors(i1) & c1.nodes).lowest();
    const int j2 = Coalition(g.neighbors(i2) & c2.nodes).lowest();
    fail(check, {j1, i1, i2, j2}, names + " share no common neighbour");
    return;
  }
  if (!linked(g, c1.nodes, c2.nodes)) {
    const bool same_layer = c1.layer == c2.layer;
    if (Coalition(c2.nodes).size() != 1) {
      fail(check, Coalition(c2.nodes).players(), names + ": the higher one is not a singleton");
      return;
    }
    if (same_layer && Coalition(c1.nodes).size() != 1) {
      fail(check, Coalition(c1.nodes).players(), names + ": same-layer component is not a singleton");
      return;
    }
    const ComponentClass cls = classify_component(g, Coalition(cc.nodes));
    const Mask touch = (n1 | n2) & cc.nodes;
    int center = -1;
    if (cls.star && Coalition(touch).size() == 1 && (cls.centers & touch)) center = Coalition(touch).lowest();
    if (center < 0) {
      std::vector<int> w = Coalition(cc.nodes).players();
      fail(check, w, names + ": upper component is not a star reached only at its centre");
      return;
    }
    for (const LayerComponent* low : {&c2, same_layer ? &c1 : nullptr}) {
      if (!low) continue;
      bool found = false;
      for_each_player(low->nodes, [&](int x) {
        for_each_player(g.neighbors(x), [&](int y) {
          if (!found && ws.priority(y) < low->layer) {
            fail(check, {x, y}, names + ": component also links to a lower layer");
            found = true;
          }
        });
      });
      if (found) return;
    }
    const Mask rest = Coalition::full(g.n()).mask & ~(Mask{1} << center);
    const int start = Coalition(c1.nodes).lowest();
    const Mask reach = component_of(g, rest, start);
    if (reach & c2.nodes) {
      std::vector<int> path = bfs_path(g, rest, start, Coalition(reach & c2.nodes).lowest());
      fail(check, path, names + ": joined by a path avoiding the centre");
    }
    return;
  }
  // Linked: a triangle through C is required, and every other low component
  // hanging on C sits on a third layer and touches both.
  bool triangle = false;
  for_each_player(cc.nodes, [&](int i) {
    for_each_player(g.neighbors(i) & c1.nodes, [&](int j1) {
      if (g.neighbors(j1) & g.neighbors(i) & c2.nodes) triangle = true;
    });
  });
  if (!triangle) {
    fail(check, {Coalition(c1.nodes).lowest(), Coalition(c2.nodes).lowest(), Coalition(cc.nodes).lowest()},
         names + ": linked pair without a triangle through the upper component");
    return;
  }
  for (std::size_t c3i = 0; c3i < comps.size(); ++c3i) {
    if (c3i == c1i || c3i == c2i) continue;
    const LayerComponent& c3 = comps[c3i];
    if (c3.layer > c2.layer || !linked(g, c3.nodes, cc.nodes)) continue;
    if (c3.layer == c1.layer || c3.layer == c2.layer || !linked(g, c3.nodes, c1.nodes) ||
        !linked(g, c3.nodes, c2.nodes)) {
      fail(check, Coalition(c3.nodes).players(),
           names + ": third component " + format(Coalition(c3.nodes)) + " breaks the triangle rule");
      return;
    }
  }
}

}  // namespace

CycleCheck is_cycle_complete(const Graph& g) {
  CycleCheck out;
  out.cycle = topped_cycle_failure(g, std::vector<int>(g.n(), 1));
  out.ok = out.cycle.empty();
  return out;
}

std::vector<int> find_topped_cycle(const Graph& g, const WeightSystem& ws) {
  if (ws.n() != g.n()) throw DimensionError("graph and weight system sizes differ");
  return topped_cycle_failure(g, ws.priorities());
}

std::vector<Pattern> all_induced_4paths(const Graph& g) {
  const int n = g.n();
  std::vector<Pattern> out;
  for (int i = 0; i < n; ++i) {
    for_each_player(g.neighbors(i), [&](int j) {
      for_each_player(g.neighbors(j) & ~g.neighbors(i) & ~(Mask{1} << i), [&](int k) {
        for_each_player(g.neighbors(k) & ~g.neighbors(j) & ~g.neighbors(i) & ~(Mask{1} << j), [&](int l) {
          if (l > i) out.push_back(Pattern{i, j, k, l});
        });
      });
    });
  }
  return out;
}

std::vector<Pattern> all_induced_3pans(const Graph& g) {
  const int n = g.n();
  std::vector<Pattern> out;
  for (int i = 0; i < n; ++i) {
    const Mask nb = g.neighbors(i);
    for_each_player(nb, [&](int j) {
      for_each_player(nb & g.neighbors(j) & ~((Mask{2} << j) - 1), [&](int k) {
        for_each_player(nb & ~g.neighbors(j) & ~g.neighbors(k) & ~(Mask{1} << j) & ~(Mask{1} << k),
                        [&](int l) { out.push_back(Pattern{i, j, k, l}); });
      });
    });
  }
  return out;
}

std::optional<Pattern> find_induced_4path(const Graph& g) {
  const int n = g.n();
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (k == j || !g.adjacent(j, k)) continue;
      const Mask left = g.neighbors(j) & ~g.neighbors(k) & ~(Mask{1} << k);
      const Mask right = g.neighbors(k) & ~g.neighbors(j) & ~(Mask{1} << j);
      for (int i = 0; i < n; ++i) {
        if (!((left >> i) & 1u)) continue;
        const Mask ends = right & ~g.neighbors(i) & ~(Mask{1} << i);
        if (ends) return Pattern{i, j, k, Coalition(ends).lowest()};
      }
    }
  }
  return std::nullopt;
}

std::optional<Pattern> find_induced_3pan(const Graph& g) {
  const int n = g.n();
  for (int i = 0; i < n; ++i) {
    const Mask nb = g.neighbors(i);
    for (int j = 0; j < n; ++j) {
      if (!((nb >> j) & 1u)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!((nb >> k) & 1u) || !g.adjacent(j, k)) continue;
        const Mask pend = nb & ~g.neighbors(j) & ~g.neighbors(k) & ~(Mask{1} << j) & ~(Mask{1} << k);
        if (pend) return Pattern{i, j, k, Coalition(pend).lowest()};
      }
    }
  }
  return std::nullopt;
}

ComponentClass classify_component(const Graph& g, Coalition component) {
  if (component.empty() || (component.mask >> g.n()) != 0 || !is_connected(g, component)) {
    throw std::invalid_argument("classify_component needs a nonempty connected node set");
  }
  ComponentClass out;
  const int size = component.size();
  int twice_edges = 0;
  bool complete = true;
  Mask hubs = 0;
  for_each_player(component.mask, [&](int v) {
    const int d = std::popcount(g.neighbors(v) & component.mask);
    twice_edges += d;
    if (d != size - 1) complete = false;
    if (d == size - 1) hubs |= Mask{1} << v;
  });
  out.complete = complete;
  // A tree with a node adjacent to all others; sizes 1 and 2 qualify with
  // every node as centre.
  if (twice_edges == 2 * (size - 1) && hubs != 0) {
    out.star = true;
    out.centers = hubs;
  }
  return out;
}

bool singleton_characterization(const Graph& g) {
  for (const Coalition& c : induced_components(g, Coalition::full(g.n()))) {
    const ComponentClass cls = classify_component(g, c);
    if (!cls.complete && !cls.star) return false;
  }
  return true;
}

Graph layer_subgraph(const Graph& g, const WeightSystem& ws, int k) {
  if (ws.n() != g.n()) throw DimensionError("graph and weight system sizes differ");
  if (k < 1 || k > ws.levels()) {
    throw std::invalid_argument("priority " + std::to_string(k) + " outside 1.." + std::to_string(ws.levels()));
  }
  return g.induced(ws.partition()[k - 1]);
}

StructureDiagnosis necessary_conditions(const Graph& g, const WeightSystem& ws) {
  if (ws.n() != g.n()) throw DimensionError("graph and weight system sizes differ");
  StructureDiagnosis d;
  const int n = g.n();

  std::vector<int> cyc = topped_cycle_failure(g, ws.priorities());
  if (!cyc.empty()) {
    fail(d.cycle_complete, cyc, "cycle " + node_list(cyc) + " is topped at node " + std::to_string(cyc[0] + 1) +
                                    " whose cycle neighbours are not adjacent");
  }

  std::vector<LayerComponent> comps;
  for (int k = 1; k <= ws.levels(); ++k) {
    const Graph layer = g.induced(ws.partition()[k - 1]);
    bool bad = false;
    for (const Coalition& c : induced_components(g, ws.partition()[k - 1])) {
      comps.push_back({c.mask, k});
      const ComponentClass cls = classify_component(layer, c);
      if (cls.complete || cls.star) continue;
      bad = true;
      if (!d.layer_star_complete.ok) continue;
      const Graph part = g.induced(c);
      std::vector<int> w;
      if (auto p = find_induced_4path(part)) {
        w.assign(p->begin(), p->end());
      } else if (auto q = find_induced_3pan(part)) {
        w.assign(q->begin(), q->end());
      } else {
        w = is_cycle_complete(part).cycle;
      }
      fail(d.layer_star_complete, w,
           "layer " + std::to_string(k) + " component " + format(c) + " is neither a star nor complete");
    }
    if (bad) d.failing_layers.push_back(k);
  }

  for (int s = 0; s < n && d.higher_link.ok; ++s) {
    for_each_player(g.neighbors(s), [&](int a) {
      if (!d.higher_link.ok || ws.priority(a) <= ws.priority(s)) return;
      const Mask ca = component_of(g, layer_mask(ws, ws.priority(a)), a);
      if (Coalition(ca).size() < 3) return;
      const ComponentClass cls = classify_component(g, Coalition(ca));
      if (cls.complete) {
        const Mask missing = ca & ~g.neighbors(s);
        if (missing) {
          const int b = Coalition(missing).lowest();
          fail(d.higher_link, {s, a, b},
               "node " + std::to_string(s + 1) + " links into a clique but misses node " + std::to_string(b + 1));
        }
      } else if (cls.star) {
        const int c = Coalition(cls.centers).lowest();
        if (c != a) {
          const int b = Coalition(ca & ~(Mask{1} << a) & ~(Mask{1} << c)).lowest();
          fail(d.higher_link, {s, a, c, b},
               "node " + std::to_string(s + 1) + " links to leaf " + std::to_string(a + 1) + " of a star");
        } else if (const Mask leaves = g.neighbors(s) & ca & ~(Mask{1} << c)) {
          const int b = Coalition(leaves).lowest();
          fail(d.higher_link, {s, a, b},
               "node " + std::to_string(s + 1) + " links to the centre and to leaf " + std::to_string(b + 1));
        }
      }
    });
  }

  for (std::size_t ci = 0; ci < comps.size() && d.multi_component.ok; ++ci) {
    std::vector<std::size_t> below;
    for (std::size_t other = 0; other < comps.size(); ++other) {
      if (comps[other].layer < comps[ci].layer && linked(g, comps[other].nodes, comps[ci].nodes)) {
        below.push_back(other);
      }
    }
    for (std::size_t a = 0; a < below.size() && d.multi_component.ok; ++a) {
      for (std::size_t b = 0; b < below.size() && d.multi_component.ok; ++b) {
        if (a == b) continue;
        const LayerComponent& c1 = comps[below[a]];
        const LayerComponent& c2 = comps[below[b]];
        if (c1.layer > c2.layer || (c1.layer == c2.layer && a > b)) continue;
        check_pair(g, ws, comps, ci, below[a], below[b], d.multi_component);
      }
    }
  }
  return d;
}

std::optional<int> is_priority_decreasing_tree(const Graph& g, const WeightSystem& ws) {
  if (ws.n() != g.n()) throw DimensionError("graph and weight system sizes differ");
  const int n = g.n();
  if (g.edge_count() != static_cast<std::size_t>(n - 1) || !is_connected(g, Coalition::full(n))) {
    return std::nullopt;
  }
  std::optional<int> best;
  for (int root = 0; root < n; ++root) {
    std::vector<int> queue{root};
    Mask seen = Mask{1} << root;
    bool ok = true;
    for (std::size_t head = 0; head < queue.size() && ok; ++head) {
      const int u = queue[head];
      for_each_player(g.neighbors(u) & ~seen, [&](int w) {
        if (ws.priority(w) > ws.priority(u)) ok = false;
        seen |= Mask{1} << w;
        queue.push_back(w);
      });
    }
    if (ok && (!best || g.degree(root) > g.degree(*best))) best = root;
  }
  return best;
}

HierarchyResult hierarchy_characterization(const Graph& g, const WeightSystem& ws) {
  if (!is_priority_decreasing_tree(g, ws)) {
    throw PreconditionError("graph is not a priority-decreasing tree for this weight system");
  }
  HierarchyResult out;
  int k = 0;
  for (int i = 0; i < g.n(); ++i) k = std::max(k, ws.priority(i));
  while (true) {
    const Mask below = ws.at_or_below(k) & Coalition::full(g.n()).mask;
    const Mask top_nodes = layer_mask(ws, k);
    // Everything left forms the last star.
    if (is_connected(g, Coalition(below))) {
      const ComponentClass cls = classify_component(g, Coalition(below));
      if (cls.star && (cls.centers & top_nodes)) {
        out.chain.push_back({k, Coalition(cls.centers & top_nodes).lowest(), Coalition(below), std::nullopt});
        out.holds = true;
        return out;
      }
    }
    int next = 0;
    for_each_player(top_nodes, [&](int u) {
      for_each_player(g.neighbors(u), [&](int w) {
        if (ws.priority(w) < k && (next == 0 || ws.priority(w) < next)) next = ws.priority(w);
      });
    });
    if (next == 0) {
      out.reason = "nodes of priority " + std::to_string(k) + " have no lower neighbour but the rest is no star";
      return out;
    }
    const Mask upper = below & ~ws.at_or_below(next);
    const Mask lower = ws.at_or_below(next) & Coalition::full(g.n()).mask;
    if (!is_connected(g, Coalition(upper))) {
      out.reason = "nodes with priority in (" + std::to_string(next) + "," + std::to_string(k) + "] are not connected";
      return out;
    }
    const ComponentClass cls = classify_component(g, Coalition(upper));
    if (!cls.star || !(cls.centers & top_nodes)) {
      out.reason = "nodes " + format(Coalition(upper)) + " do not form a star centred at priority " + std::to_string(k);
      return out;
    }
    std::vector<Edge> cross;
    for_each_player(upper, [&](int u) {
      for_each_player(g.neighbors(u) & lower, [&](int w) { cross.emplace_back(u, w); });
    });
    if (cross.size() != 1) {
      out.reason = "star " + format(Coalition(upper)) + " has " + std::to_string(cross.size()) +
                   " edges to lower priorities";
      return out;
    }
    const auto [c, w] = cross.front();
    if (!((cls.centers & top_nodes) >> c & 1u) || ws.priority(w) != next) {
      out.reason = "edge {" + std::to_string(c + 1) + "," + std::to_string(w + 1) +
                   "} does not join the star centre to a node of priority " + std::to_string(next);
      return out;
    }
    out.chain.push_back({k, c, Coalition(upper), Edge{c, w}});
    k = next;
  }
}

Diagnosis diagnose(const Graph& g, const WeightSystem& ws) {
  Diagnosis d;
  d.conditions = necessary_conditions(g, ws);
  d.single_priority = ws.levels() == 1;
  if (d.single_priority) d.singleton = singleton_characterization(g);
  d.tree_root = is_priority_decreasing_tree(g, ws);
  if (d.tree_root) d.hierarchy = hierarchy_characterization(g, ws);
  const bool proven = (d.singleton && *d.singleton) || (d.hierarchy && d.hierarchy->holds);
  const bool refuted = !d.conditions.all_ok() || (d.singleton && !*d.singleton) || (d.hierarchy && !d.hierarchy->holds);
  if (proven) {
    d.verdict = Verdict::preserved;
  } else if (refuted) {
    d.verdict = Verdict::not_preserved;
  } else {
    d.verdict = Verdict::unknown;
  }
  return d;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::preserved:
      return "preserved";
    case Verdict::not_preserved:
      return "not_preserved";
    case Verdict::unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace coop
