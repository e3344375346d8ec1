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

#include "coop/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "coop/errors.hpp"

namespace coop {
namespace {

int parse_player(const std::string& token, int n) {
  std::size_t used = 0;
  int p = 0;
  try {
    p = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("bad player id '" + token + "'");
  }
  if (used != token.size()) throw ParseError("bad player id '" + token + "'");
  if (p < 1 || p > n) throw DimensionError("player " + token + " outside 1.." + std::to_string(n));
  return p - 1;
}

int player_from_json(const Json& j, int n) {
  if (!j.is_number_integer()) throw ParseError("player ids must be integers");
  const int p = j.get<int>();
  if (p < 1 || p > n) throw DimensionError("player " + std::to_string(p) + " outside 1.." + std::to_string(n));
  return p - 1;
}

int count_from_json(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer()) {
    throw ParseError(std::string("missing integer field '") + key + "'");
  }
  return j.at(key).get<int>();
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

Coalition parse_player_list(const std::string& text, int n) {
  Coalition out;
  std::string token;
  std::stringstream ss(text);
  while (std::getline(ss, token, ',')) {
    std::string trimmed;
    for (char c : token) {
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    }
    if (trimmed.empty()) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw ParseError("empty player id in '" + text + "'");
    }
    const int p = parse_player(trimmed, n);
    if (out.contains(p)) throw ParseError("player repeated in '" + text + "'");
    out = out.with(p);
  }
  return out;
}

std::string player_list_key(Coalition s) {
  std::string out;
  for_each_player(s.mask, [&](int i) {
    if (!out.empty()) out += ',';
    out += std::to_string(i + 1);
  });
  return out;
}

Json coalition_to_json(Coalition s) {
  Json out = Json::array();
  for_each_player(s.mask, [&](int i) { out.push_back(i + 1); });
  return out;
}

Json rational_to_json(const Rational& r, bool decimal) {
  if (!decimal) return to_string(r);
  return Json{{"exact", to_string(r)}, {"approx", to_double(r)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_object() && j.contains("exact")) return rational_from_json(j.at("exact"));
  throw ParseError("rationals must be strings like \"p/q\" or integers, got " + j.dump());
}

TuGame game_from_json(const Json& j) {
  return guarded([&] {
    const int n = count_from_json(j, "n");
    check_player_count(n);
    std::map<Coalition, Rational> entries;
    if (j.contains("values")) {
      if (!j.at("values").is_object()) throw ParseError("'values' must be an object");
      for (const auto& [key, value] : j.at("values").items()) {
        const Coalition s = parse_player_list(key, n);
        if (entries.count(s)) throw ParseError("coalition " + format(s) + " listed twice");
        entries[s] = rational_from_json(value);
      }
    }
    return make_game(n, entries);
  });
}

Json game_to_json(const TuGame& v) {
  Json values = Json::object();
  // Ordered by size, then by mask, so small coalitions come first.
  for (int size = 1; size <= v.n(); ++size) {
    for (Mask s = 1; s < v.size(); ++s) {
      if (Coalition(s).size() == size && v[s] != 0) values[player_list_key(Coalition(s))] = to_string(v[s]);
    }
  }
  return Json{{"n", v.n()}, {"values", values}};
}

WeightSystem weights_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("weights") || !j.at("weights").is_array()) {
      throw ParseError("weight file needs a 'weights' array");
    }
    std::vector<Rational> w;
    for (const Json& x : j.at("weights")) w.push_back(rational_from_json(x));
    const int n = static_cast<int>(w.size());
    check_player_count(n);
    if (!j.contains("partition")) return WeightSystem::simple(std::move(w));
    if (!j.at("partition").is_array()) throw ParseError("'partition' must be an array of arrays");
    std::vector<Coalition> parts;
    for (const Json& block : j.at("partition")) {
      if (!block.is_array()) throw ParseError("partition blocks must be arrays");
      Coalition c;
      for (const Json& p : block) c = c.with(player_from_json(p, n));
      parts.push_back(c);
    }
    return WeightSystem(std::move(w), std::move(parts));
  });
}

Json weights_to_json(const WeightSystem& ws) {
  Json w = Json::array();
  for (const Rational& x : ws.weights()) w.push_back(to_string(x));
  Json parts = Json::array();
  for (const Coalition& c : ws.partition()) parts.push_back(coalition_to_json(c));
  return Json{{"weights", w}, {"partition", parts}};
}

Graph graph_from_json(const Json& j) {
  return guarded([&] {
    const int n = count_from_json(j, "n");
    check_player_count(n);
    std::vector<Edge> edges;
    if (j.contains("edges")) {
      if (!j.at("edges").is_array()) throw ParseError("'edges' must be an array");
      for (const Json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair [i,j]");
        edges.emplace_back(player_from_json(e[0], n), player_from_json(e[1], n));
      }
    }
    return Graph(n, edges);
  });
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back(Json::array({a + 1, b + 1}));
  return Json{{"n", g.n()}, {"edges", edges}};
}

Allocation allocation_from_json(const Json& j, int n) {
  return guarded([&] {
    if (!j.is_array()) throw ParseError("allocation must be an array");
    Allocation x;
    for (const Json& e : j) x.push_back(rational_from_json(e));
    if (static_cast<int>(x.size()) != n) {
      throw DimensionError("allocation has " + std::to_string(x.size()) + " entries for " + std::to_string(n) +
                           " players");
    }
    return x;
  });
}

Json allocation_to_json(const Allocation& x, bool decimal) {
  Json out = Json::array();
  for (const Rational& r : x) out.push_back(rational_to_json(r, decimal));
  return out;
}

Json violation_to_json(const Violation& v, bool decimal) {
  return Json{{"S", coalition_to_json(v.s)},
              {"T", coalition_to_json(v.t)},
              {"lhs", rational_to_json(v.lhs, decimal)},
              {"rhs", rational_to_json(v.rhs, decimal)}};
}

Json report_to_json(const ConvexityReport& r, bool decimal) {
  Json viol = Json::array();
  for (const Violation& v : r.violations) viol.push_back(violation_to_json(v, decimal));
  return Json{{"holds", r.holds}, {"violations", viol}};
}

Json triple_report_to_json(const WeakSuperadditivityReport& r, bool decimal) {
  Json viol = Json::array();
  for (const TripleViolation& v : r.violations) {
    viol.push_back(Json{{"S", coalition_to_json(v.s)},
                        {"T", coalition_to_json(v.t)},
                        {"U", coalition_to_json(v.u)},
                        {"lhs", rational_to_json(v.lhs, decimal)},
                        {"rhs", rational_to_json(v.rhs, decimal)}});
  }
  return Json{{"holds", r.holds}, {"violations", viol}};
}

namespace {

Json nodes_to_json(const std::vector<int>& nodes) {
  Json out = Json::array();
  for (int v : nodes) out.push_back(v + 1);
  return out;
}

Json condition_to_json(const ConditionCheck& c) {
  Json out{{"ok", c.ok}};
  if (!c.ok) {
    out["witness"] = nodes_to_json(c.witness);
    out["reason"] = c.reason;
  }
  return out;
}

}  // namespace

Json diagnosis_to_json(const Diagnosis& d) {
  Json cond{{"cycle_complete", condition_to_json(d.conditions.cycle_complete)},
            {"layer_star_complete", condition_to_json(d.conditions.layer_star_complete)},
            {"higher_link", condition_to_json(d.conditions.higher_link)},
            {"multi_component", condition_to_json(d.conditions.multi_component)}};
  if (!d.conditions.failing_layers.empty()) cond["failing_layers"] = d.conditions.failing_layers;
  Json out{{"conditions", cond}, {"single_priority", d.single_priority}};
  if (d.singleton) out["singleton_characterization"] = *d.singleton;
  if (d.tree_root) {
    out["priority_decreasing_tree_root"] = *d.tree_root + 1;
  } else {
    out["priority_decreasing_tree_root"] = nullptr;
  }
  if (d.hierarchy) {
    Json h{{"holds", d.hierarchy->holds}};
    Json chain = Json::array();
    for (const StarLevel& s : d.hierarchy->chain) {
      Json level{{"priority", s.priority}, {"center", s.center + 1}, {"nodes", coalition_to_json(s.nodes)}};
      if (s.bridge) level["bridge"] = Json::array({s.bridge->first + 1, s.bridge->second + 1});
      chain.push_back(level);
    }
    h["chain"] = chain;
    if (!d.hierarchy->holds) h["reason"] = d.hierarchy->reason;
    out["hierarchy"] = h;
  }
  out["verdict"] = to_string(d.verdict);
  return out;
}

Json bundle_to_json(const CounterexampleBundle& b, bool decimal) {
  Json params = Json::object();
  for (const auto& [k, v] : b.params) params[k] = rational_to_json(v, decimal);
  return Json{{"family", b.family},
              {"game", game_to_json(b.game)},
              {"weights", weights_to_json(b.ws)},
              {"graph", graph_to_json(b.graph)},
              {"witness", Json{{"S", coalition_to_json(b.witness_s)}, {"T", coalition_to_json(b.witness_t)}}},
              {"params", params}};
}

CounterexampleBundle bundle_from_json(const Json& j) {
  return guarded([&] {
    TuGame game = game_from_json(j.at("game"));
    WeightSystem ws = weights_from_json(j.at("weights"));
    Graph g = graph_from_json(j.at("graph"));
    const int n = game.n();
    auto coalition = [&](const Json& arr) {
      Coalition c;
      for (const Json& p : arr) c = c.with(player_from_json(p, n));
      return c;
    };
    CounterexampleBundle b{j.value("family", std::string("unknown")), std::move(game), std::move(ws), std::move(g),
                           coalition(j.at("witness").at("S")), coalition(j.at("witness").at("T")), {}};
    if (j.contains("params")) {
      for (const auto& [k, v] : j.at("params").items()) b.params[k] = rational_from_json(v);
    }
    return b;
  });
}

}  // namespace coop
