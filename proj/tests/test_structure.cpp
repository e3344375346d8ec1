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

#include "coop/errors.hpp"
#include "coop/structure.hpp"
#include "oracles.hpp"

using namespace coop;
using oracle::c;
using oracle::m;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double p) {
  std::bernoulli_distribution edge(p);
  std::vector<Edge> e;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (edge(rng)) e.emplace_back(a, b);
    }
  }
  return Graph(n, e);
}

Graph one_based(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> e;
  for (auto [a, b] : edges) e.emplace_back(a - 1, b - 1);
  return Graph(n, e);
}

// Three priority-decreasing trees sharing root 3.
Graph fig8a() { return one_based(9, {{1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 7}, {6, 7}, {7, 8}, {7, 9}}); }
Graph fig8b() { return one_based(9, {{1, 3}, {2, 3}, {3, 4}, {4, 5}, {3, 7}, {6, 7}, {7, 8}, {7, 9}}); }
WeightSystem fig8ab_ws() {
  return WeightSystem::from_priorities(std::vector<Rational>(9, Rational(1)), {3, 3, 3, 3, 2, 1, 1, 1, 1});
}
WeightSystem fig8c_ws() {
  return WeightSystem::from_priorities(std::vector<Rational>(9, Rational(1)), {3, 3, 3, 3, 1, 2, 2, 2, 2});
}

bool is_cycle_in(const Graph& g, const std::vector<int>& cyc) {
  if (cyc.size() < 3) return false;
  for (std::size_t k = 0; k < cyc.size(); ++k) {
    if (!g.adjacent(cyc[k], cyc[(k + 1) % cyc.size()])) return false;
  }
  std::vector<int> sorted(cyc);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace

TEST_CASE("cycle completeness") {
  CHECK(is_cycle_complete(Graph::complete(3)).ok);
  const Graph c4 = Graph::cycle({0, 1, 2, 3}, 4);
  CycleCheck r = is_cycle_complete(c4);
  CHECK_FALSE(r.ok);
  CHECK(is_cycle_in(c4, r.cycle));
  CHECK(is_cycle_complete(fig8a()).ok);
  CHECK(is_cycle_complete(Graph::path({0, 1, 2, 3, 4}, 5)).ok);

  // Against enumeration of every simple cycle.
  std::mt19937_64 rng(51);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 3 + rep % 5;
    Graph g = random_graph(n, rng, 0.5);
    bool expect = true;
    for (Mask s : oracle::all_cycle_sets(g)) {
      if (!oracle::induces_complete(g, s)) expect = false;
    }
    CycleCheck got = is_cycle_complete(g);
    CHECK(got.ok == expect);
    if (!got.ok) {
      CHECK(is_cycle_in(g, got.cycle));
      Mask cs = 0;
      for (int v : got.cycle) cs |= Mask{1} << v;
      CHECK_FALSE(oracle::induces_complete(g, cs));
    }
  }
}

TEST_CASE("induced patterns") {
  auto p = find_induced_4path(Graph::path({0, 1, 2, 3}, 4));
  REQUIRE(p);
  CHECK_FALSE(find_induced_4path(Graph::complete(4)));
  auto f = find_induced_4path(fig8a());
  REQUIRE(f);
  const Graph pan = one_based(4, {{1, 4}, {1, 2}, {2, 4}, {2, 3}});
  auto t = find_induced_3pan(pan);
  REQUIRE(t);
  CHECK((*t)[0] == 1);  // degree-3 node 2
  CHECK((*t)[3] == 2);  // pendant 3
  CHECK_FALSE(find_induced_3pan(Graph::star(0, 5)));
  CHECK_FALSE(find_induced_3pan(Graph::complete(4)));

  std::mt19937_64 rng(52);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 4 + rep % 4;
    Graph g = random_graph(n, rng, 0.5);
    auto fp = find_induced_4path(g);
    auto fpan = find_induced_3pan(g);
    CHECK(fp.has_value() == oracle::has_induced_p4(g));
    CHECK(fpan.has_value() == oracle::has_induced_3pan(g));
    if (fp) {
      const auto [i, j, k, l] = *fp;
      CHECK((g.adjacent(i, j) && g.adjacent(j, k) && g.adjacent(k, l)));
      CHECK_FALSE((g.adjacent(i, k) || g.adjacent(i, l) || g.adjacent(j, l)));
    }
    if (fpan) {
      const auto [i, j, k, l] = *fpan;
      CHECK((g.adjacent(i, j) && g.adjacent(j, k) && g.adjacent(i, k) && g.adjacent(i, l)));
      CHECK_FALSE((g.adjacent(l, j) || g.adjacent(l, k)));
    }
    // The full lists contain exactly the 4-sets of the right shape.
    std::set<Mask> p4sets;
    std::set<Mask> pansets;
    for (const Pattern& q : all_induced_4paths(g)) p4sets.insert(m({q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1}));
    for (const Pattern& q : all_induced_3pans(g)) pansets.insert(m({q[0] + 1, q[1] + 1, q[2] + 1, q[3] + 1}));
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      if (Coalition(s).size() != 4) continue;
      const auto sig = oracle::degree_signature(g, s);
      CHECK(p4sets.count(s) == (sig == std::vector<int>{1, 1, 2, 2} ? 1u : 0u));
      CHECK(pansets.count(s) == (sig == std::vector<int>{1, 2, 2, 3} ? 1u : 0u));
    }
  }
}

TEST_CASE("component classification") {
  ComponentClass star = classify_component(Graph::star(0, 4), Coalition::full(4));
  CHECK(star.star);
  CHECK_FALSE(star.complete);
  CHECK(star.centers == 1u);
  ComponentClass k4 = classify_component(Graph::complete(4), Coalition::full(4));
  CHECK(k4.complete);
  CHECK_FALSE(k4.star);
  ComponentClass p4 = classify_component(Graph::path({0, 1, 2, 3}, 4), Coalition::full(4));
  CHECK_FALSE(p4.complete);
  CHECK_FALSE(p4.star);
  ComponentClass one = classify_component(Graph(3), c({2}));
  CHECK((one.complete && one.star && one.centers == m({2})));
  ComponentClass two = classify_component(Graph(3, {{0, 2}}), c({1, 3}));
  CHECK((two.complete && two.star && two.centers == m({1, 3})));
  CHECK_THROWS(classify_component(Graph(3), c({1, 2})));
}

TEST_CASE("singleton characterization") {
  CHECK(singleton_characterization(Graph::star(2, 6)));
  CHECK_FALSE(singleton_characterization(Graph::path({0, 1, 2, 3}, 4)));
  CHECK(singleton_characterization(one_based(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}})));
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 2 + rep % 6;
    Graph g = random_graph(n, rng, 0.5);
    const bool expect = is_cycle_complete(g).ok && !oracle::has_induced_p4(g) && !oracle::has_induced_3pan(g);
    CHECK(singleton_characterization(g) == expect);
  }
}

TEST_CASE("singleton characterization on every small connected graph") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<Edge> pairs;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    for (std::uint32_t bits = 0; bits < (1u << pairs.size()); ++bits) {
      std::vector<Edge> e;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (bits >> k & 1u) e.push_back(pairs[k]);
      }
      const Graph g(n, e);
      if (!is_connected(g, Coalition::full(n))) continue;
      const bool expect = is_cycle_complete(g).ok && !oracle::has_induced_p4(g) && !oracle::has_induced_3pan(g);
      REQUIRE(singleton_characterization(g) == expect);
    }
  }
}

TEST_CASE("layer subgraphs") {
  const Graph g = fig8a();
  CHECK(layer_subgraph(g, WeightSystem::uniform(9), 1) == g);
  const Graph l1 = layer_subgraph(g, fig8ab_ws(), 1);
  CHECK(l1.edges() == std::vector<Edge>{{5, 6}, {6, 7}, {6, 8}});
  const Graph l2 = layer_subgraph(g, fig8ab_ws(), 2);
  CHECK(l2.edge_count() == 0);
  CHECK_THROWS(layer_subgraph(g, fig8ab_ws(), 4));
  CHECK_THROWS(layer_subgraph(g, fig8ab_ws(), 0));
}

TEST_CASE("priority-decreasing trees") {
  CHECK(is_priority_decreasing_tree(fig8a(), fig8ab_ws()) == 2);
  const WeightSystem mid = WeightSystem::from_priorities({1, 1, 1}, {1, 2, 1});
  CHECK(is_priority_decreasing_tree(Graph::path({0, 1, 2}, 3), mid) == 1);
  CHECK_FALSE(is_priority_decreasing_tree(Graph::complete(3), WeightSystem::uniform(3)));
  CHECK_FALSE(is_priority_decreasing_tree(Graph(3, {{0, 1}}), WeightSystem::uniform(3)));
}

TEST_CASE("hierarchy characterization") {
  HierarchyResult a = hierarchy_characterization(fig8a(), fig8ab_ws());
  CHECK(a.holds);
  REQUIRE(a.chain.size() == 2);
  CHECK(a.chain[0].center == 2);
  CHECK(a.chain[0].nodes == c({1, 2, 3, 4, 5}));
  CHECK(a.chain[0].bridge == Edge{2, 6});
  CHECK(a.chain[1].center == 6);
  CHECK(a.chain[1].nodes == c({6, 7, 8, 9}));
  CHECK_FALSE(a.chain[1].bridge);
  CHECK_FALSE(hierarchy_characterization(fig8b(), fig8ab_ws()).holds);
  CHECK_FALSE(hierarchy_characterization(fig8a(), fig8c_ws()).holds);
  HierarchyResult s = hierarchy_characterization(Graph::star(0, 5), WeightSystem::uniform(5));
  CHECK(s.holds);
  CHECK(s.chain.size() == 1);
  CHECK_THROWS_AS(hierarchy_characterization(Graph::complete(3), WeightSystem::uniform(3)), PreconditionError);
  // A star whose two lowest-priority leaves hang at the centre.
  const WeightSystem two_low = WeightSystem::from_priorities({1, 1, 1, 1}, {2, 2, 1, 1});
  CHECK(hierarchy_characterization(Graph::star(0, 4), two_low).holds);
}

TEST_CASE("necessary conditions") {
  StructureDiagnosis a = necessary_conditions(fig8a(), fig8ab_ws());
  CHECK(a.all_ok());
  StructureDiagnosis b = necessary_conditions(fig8b(), fig8ab_ws());
  CHECK_FALSE(b.all_ok());
  CHECK_FALSE(b.higher_link.ok);
  REQUIRE(b.higher_link.witness.size() == 4);
  CHECK(b.higher_link.witness[0] == 4);  // node 5 hangs below leaf 4
  CHECK(b.higher_link.witness[1] == 3);
  CHECK(b.higher_link.witness[2] == 2);  // centre 3
  StructureDiagnosis cc = necessary_conditions(fig8a(), fig8c_ws());
  CHECK_FALSE(cc.multi_component.ok);

  // s below leaf a of a star a-c-b at a higher level.
  const Graph f5 = Graph(4, {{0, 1}, {1, 2}, {2, 3}});  // s=1, a=2, c=3, b=4
  const WeightSystem f5ws = WeightSystem::from_priorities({1, 1, 1, 1}, {1, 2, 2, 2});
  StructureDiagnosis d5 = necessary_conditions(f5, f5ws);
  CHECK_FALSE(d5.higher_link.ok);
  CHECK(d5.higher_link.witness == std::vector<int>{0, 1, 2, 3});

  // Single level: the layer condition alone is the singleton predicate.
  std::mt19937_64 rng(54);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = 2 + rep % 6;
    Graph g = random_graph(n, rng, 0.5);
    StructureDiagnosis d = necessary_conditions(g, WeightSystem::uniform(n));
    CHECK(d.layer_star_complete.ok == singleton_characterization(g));
    if (singleton_characterization(g)) CHECK(d.all_ok());
  }
}

TEST_CASE("necessary conditions against the hierarchy on trees") {
  // On priority-decreasing trees the chain exists exactly when no condition
  // fails; the chain's existence implies the conditions and vice versa.
  std::mt19937_64 rng(55);
  int trues = 0;
  int falses = 0;
  for (int rep = 0; rep < 3000; ++rep) {
    const int n = 2 + rep % 6;
    // Random labelled tree by attaching each node to an earlier one, with
    // priorities non-increasing from node 0.
    std::vector<Edge> e;
    std::vector<int> prio(n);
    std::uniform_int_distribution<int> top(1, 3);
    prio[0] = top(rng);
    for (int v = 1; v < n; ++v) {
      std::uniform_int_distribution<int> par(0, v - 1);
      const int p = par(rng);
      e.emplace_back(p, v);
      std::uniform_int_distribution<int> pv(1, prio[p]);
      prio[v] = pv(rng);
    }
    std::vector<int> used(prio);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    for (int& p : prio) p = 1 + static_cast<int>(std::lower_bound(used.begin(), used.end(), p) - used.begin());
    const Graph g(n, e);
    const WeightSystem ws = WeightSystem::from_priorities(std::vector<Rational>(n, Rational(1)), prio);
    REQUIRE(is_priority_decreasing_tree(g, ws));
    const bool h = hierarchy_characterization(g, ws).holds;
    const bool conds = necessary_conditions(g, ws).all_ok();
    (h ? trues : falses)++;
    if (!h) CHECK(!conds);
    if (h) CHECK(conds);
  }
  CHECK(trues > 100);
  CHECK(falses > 100);
}

TEST_CASE("diagnosis verdicts") {
  CHECK(diagnose(Graph::star(0, 5), WeightSystem::uniform(5)).verdict == Verdict::preserved);
  CHECK(diagnose(fig8b(), fig8ab_ws()).verdict == Verdict::not_preserved);
  CHECK(diagnose(fig8a(), fig8ab_ws()).verdict == Verdict::preserved);
  CHECK(diagnose(Graph::path({0, 1, 2, 3}, 4), WeightSystem::uniform(4)).verdict == Verdict::not_preserved);
  // Two levels, a triangle on top with a single low node linked to all of
  // it: not a tree and every necessary condition holds.
  const Graph k4 = Graph::complete(4);
  const WeightSystem ws = WeightSystem::from_priorities({1, 1, 1, 1}, {2, 2, 2, 1});
  const Diagnosis d = diagnose(k4, ws);
  CHECK(d.conditions.all_ok());
  CHECK(d.verdict == Verdict::unknown);
}
