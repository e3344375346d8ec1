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

// coopgame: command-line front end to the coop library.
//
// Exit codes: 0 holds, 1 violated, 2 parse error, 3 dimension mismatch,
// 4 internal error, 5 precondition violated.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coop/convexity.hpp"
#include "coop/counterexamples.hpp"
#include "coop/errors.hpp"
#include "coop/io.hpp"
#include "coop/shapley.hpp"
#include "coop/structure.hpp"

using namespace coop;

namespace {

constexpr int kHolds = 0;
constexpr int kViolated = 1;
constexpr int kParse = 2;
constexpr int kDimension = 3;
constexpr int kInternal = 4;
constexpr int kPrecondition = 5;

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
  std::string game;
  std::string weights;
  std::string graph;
  std::string alloc;
  std::string out;
  std::string format = "json";
  std::string method = "dividends";
  std::string what = "wac";
  std::string family;
  std::string cycle;
  std::string roles;
  std::vector<std::string> chords;
  int lstar = 0;
  int players = 4;
  long trials = 500;
  std::uint64_t seed = kDefaultSeed;
  bool decimal = false;
  bool all = false;
  bool no_corpus = false;
};

class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void flatten(const Json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
  } else {
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Options& o, const Json& j) {
  std::ostringstream text;
  if (o.format == "table") {
    flatten(j, "", text);
  } else {
    text << j.dump(2) << "\n";
  }
  if (o.out.empty()) {
    std::cout << text.str();
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw ParseError("cannot write '" + o.out + "'");
  f << text.str();
}

TuGame load_game(const Options& o) { return game_from_json(load_json_file(o.game)); }

// Uniform weights on a single level when no file is given.
WeightSystem load_weights(const Options& o, int n) {
  if (o.weights.empty()) return WeightSystem::uniform(n);
  WeightSystem ws = weights_from_json(load_json_file(o.weights));
  if (ws.n() != n) {
    throw DimensionError("weight system has " + std::to_string(ws.n()) + " players, expected " + std::to_string(n));
  }
  return ws;
}

Graph load_graph(const Options& o, int n) {
  Graph g = graph_from_json(load_json_file(o.graph));
  if (g.n() != n) throw DimensionError("graph has " + std::to_string(g.n()) + " nodes, expected " + std::to_string(n));
  return g;
}

// 1-based comma list preserving order.
std::vector<int> parse_sequence(const std::string& text, int n) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const Coalition one = parse_player_list(tok, n);
    if (one.size() != 1) throw ParseError("bad player '" + tok + "' in '" + text + "'");
    out.push_back(one.lowest());
  }
  return out;
}

int cmd_value(const Options& o) {
  const TuGame v = load_game(o);
  const WeightSystem ws = load_weights(o, v.n());
  Json out;
  if (!o.graph.empty()) {
    const Graph g = load_graph(o, v.n());
    out["method"] = "myerson";
    out["value"] = allocation_to_json(weighted_myerson(v, g, ws), o.decimal);
    emit(o, out);
    return kHolds;
  }
  auto compute = [&](const std::string& m) {
    if (m == "dividends") return weighted_shapley_dividends(v, ws);
    if (m == "orders") {
      if (v.n() > kMaxOrderPlayers) {
        throw PreconditionError("order enumeration is limited to " + std::to_string(kMaxOrderPlayers) + " players");
      }
      return weighted_shapley_orders(v, ws);
    }
    if (m == "recursive") return weighted_shapley_recursive(v, ws);
    return weighted_shapley_gamma(v, ws);
  };
  if (o.method != "all") {
    out["method"] = o.method;
    out["value"] = allocation_to_json(compute(o.method), o.decimal);
    emit(o, out);
    return kHolds;
  }
  const Allocation base = compute("dividends");
  bool agree = true;
  for (const char* m : {"dividends", "orders", "recursive", "gamma"}) {
    const Allocation x = std::string(m) == "dividends" ? base : compute(m);
    agree = agree && x == base;
    out[m] = allocation_to_json(x, o.decimal);
  }
  out["agree"] = agree;
  emit(o, out);
  if (!agree) throw InternalError("the four computations disagree");
  return kHolds;
}

int cmd_check(const Options& o) {
  const TuGame v = load_game(o);
  const WeightSystem ws = load_weights(o, v.n());
  Json out{{"property", o.what}};
  bool holds = true;
  if (o.what == "wac" || o.what == "avg") {
    const ConvexityReport r =
        o.what == "wac" ? check_weighted_average_convexity(v, ws, o.all) : check_average_convexity(v, o.all);
    holds = r.holds;
    out.update(report_to_json(r, o.decimal));
  } else if (o.what == "convex") {
    const Mask limit = v.full_mask() + 1;
    for (Mask a = 0; a < limit && holds; ++a) {
      for (Mask b = a + 1; b < limit; ++b) {
        const Rational d = delta(v, Coalition(a), Coalition(b));
        if (d < 0) {
          holds = false;
          out["witness"] = Json{{"A", coalition_to_json(Coalition(a))},
                                {"B", coalition_to_json(Coalition(b))},
                                {"delta", rational_to_json(d, o.decimal)}};
          break;
        }
      }
    }
    out["holds"] = holds;
  } else if (o.what == "superadd") {
    const Mask full = v.full_mask();
    for (Mask a = 1; a <= full && holds; ++a) {
      const Mask rest = full & ~a;
      for (Mask b = rest; b != 0; b = (b - 1) & rest) {
        if (b < a || v[a | b] >= v[a] + v[b]) continue;
        holds = false;
        out["witness"] = Json{{"A", coalition_to_json(Coalition(a))},
                              {"B", coalition_to_json(Coalition(b))},
                              {"union", rational_to_json(v[a | b], o.decimal)},
                              {"sum", rational_to_json(v[a] + v[b], o.decimal)}};
        break;
      }
    }
    out["holds"] = holds;
  } else if (o.what == "weaksuper") {
    const WeakSuperadditivityReport r = weak_superadditivity_holds(v, ws, o.all);
    holds = r.holds;
    out.update(triple_report_to_json(r, o.decimal));
  } else {
    const Allocation x =
        o.alloc.empty() ? weighted_shapley_dividends(v, ws) : allocation_from_json(load_json_file(o.alloc), v.n());
    out["allocation"] = allocation_to_json(x, o.decimal);
    Rational total = 0;
    for (const Rational& r : x) total += r;
    if (total != v[v.full_mask()]) {
      holds = false;
      out["witness"] = Json{{"S", coalition_to_json(Coalition::full(v.n()))},
                            {"worth", rational_to_json(v[v.full_mask()], o.decimal)},
                            {"paid", rational_to_json(total, o.decimal)}};
    }
    for (Mask s = 1; s < v.full_mask() && holds; ++s) {
      Rational paid = 0;
      for_each_player(s, [&](int i) { paid += x[i]; });
      if (paid < v[s]) {
        holds = false;
        out["witness"] = Json{{"S", coalition_to_json(Coalition(s))},
                              {"worth", rational_to_json(v[s], o.decimal)},
                              {"paid", rational_to_json(paid, o.decimal)}};
      }
    }
    if (holds != core_contains(v, x)) throw InternalError("core scan disagrees with core_contains");
    out["holds"] = holds;
  }
  emit(o, out);
  return holds ? kHolds : kViolated;
}

int cmd_restrict(const Options& o) {
  const TuGame v = load_game(o);
  const Graph g = load_graph(o, v.n());
  emit(o, game_to_json(restricted_game(v, g)));
  return kHolds;
}

int cmd_diagnose(const Options& o) {
  const Graph g = graph_from_json(load_json_file(o.graph));
  const WeightSystem ws = load_weights(o, g.n());
  emit(o, diagnosis_to_json(diagnose(g, ws)));
  return kHolds;
}

int cmd_counterexample(const Options& o) {
  const WeightSystem ws = o.weights.empty() ? WeightSystem::uniform(o.players) : load_weights(o, o.players);
  const int n = ws.n();
  std::optional<CounterexampleBundle> b;
  if (o.family == "cycle") {
    std::vector<int> nodes;
    if (o.cycle.empty()) {
      for (int i = 0; i < n; ++i) nodes.push_back(i);
    } else {
      nodes = parse_sequence(o.cycle, n);
    }
    int lstar = o.lstar - 1;
    if (o.lstar == 0) {
      lstar = nodes.front();
      for (int v : nodes) {
        if (ws.priority(v) > ws.priority(lstar)) lstar = v;
      }
    }
    std::vector<Edge> chords;
    for (const std::string& c : o.chords) {
      const std::vector<int> ends = parse_sequence(c, n);
      if (ends.size() != 2) throw ParseError("chord '" + c + "' must name two players");
      chords.emplace_back(ends[0], ends[1]);
    }
    b = noncomplete_cycle_bundle(nodes, chords, lstar, ws);
  } else {
    Roles roles = kIdentityRoles;
    if (!o.roles.empty()) {
      const std::vector<int> r = parse_sequence(o.roles, n);
      if (r.size() != 4) throw ParseError("--roles needs four players");
      roles = Roles{r[0], r[1], r[2], r[3]};
    }
    b = o.family == "threepan" ? threepan_bundle(ws, roles) : fourpath_bundle(ws, roles);
  }
  const BundleVerification r = verify_bundle(*b);
  Json out = bundle_to_json(*b, o.decimal);
  out["verification"] = Json{{"ok", r.ok}, {"game_holds", r.game_holds}, {"at_witness", violation_to_json(r.at_witness, o.decimal)}};
  emit(o, out);
  if (!r.ok) throw InternalError("constructed bundle failed verification: " + r.reason);
  return kHolds;
}

int cmd_fuzz(const Options& o) {
  const Graph g = graph_from_json(load_json_file(o.graph));
  const WeightSystem ws = load_weights(o, g.n());
  const auto start = std::chrono::steady_clock::now();
  const std::optional<FuzzWitness> hit = preservation_fuzz(g, ws, o.trials, o.seed, !o.no_corpus);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json out{{"trials", o.trials}, {"seed", o.seed}, {"corpus", !o.no_corpus}};
  if (!hit) {
    out["outcome"] = "no violation";
  } else {
    out["outcome"] = "violation";
    out["source"] = hit->source;
    if (hit->trial >= 0) out["trial"] = hit->trial;
    out["violation"] = violation_to_json(hit->violation, o.decimal);
    CounterexampleBundle b = hit->bundle ? *hit->bundle
                                         : CounterexampleBundle{"random", hit->game, ws, g, hit->violation.s,
                                                                hit->violation.t, {}};
    if (!verify_bundle(b)) throw InternalError("fuzz witness failed re-verification");
    out["bundle"] = bundle_to_json(b, o.decimal);
  }
  emit(o, out);
  std::fprintf(stderr, "elapsed %.3fs\n", secs);
  return hit ? kViolated : kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tools for TU-games, weighted Shapley values and communication graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--decimal", o.decimal, "Add decimal approximations next to exact values");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("-o,--out", o.out, "Write output to a file instead of stdout");

  auto* value = app.add_subcommand("value", "Weighted Shapley value (or weighted Myerson value with --graph)");
  value->add_option("--game", o.game, "Game file")->required();
  value->add_option("--weights", o.weights, "Weight-system file (default: uniform, one level)");
  value->add_option("--graph", o.graph, "Graph file");
  value->add_option("--method", o.method, "Computation")
      ->check(CLI::IsMember({"dividends", "orders", "recursive", "gamma", "all"}));

  auto* check = app.add_subcommand("check", "Check a property of a game");
  check->add_option("--game", o.game, "Game file")->required();
  check->add_option("--weights", o.weights, "Weight-system file (default: uniform, one level)");
  check->add_option("--what", o.what, "Property")
      ->check(CLI::IsMember({"wac", "avg", "convex", "superadd", "weaksuper", "core"}));
  check->add_option("--alloc", o.alloc, "Allocation file for --what core (default: the weighted Shapley value)");
  check->add_flag("--all", o.all, "Report every violation instead of the first");

  auto* restrict_cmd = app.add_subcommand("restrict", "Emit the graph-restricted game");
  restrict_cmd->add_option("--game", o.game, "Game file")->required();
  restrict_cmd->add_option("--graph", o.graph, "Graph file")->required();

  auto* diag = app.add_subcommand("diagnose", "Structural conditions and preservation verdict for a graph");
  diag->add_option("--graph", o.graph, "Graph file")->required();
  diag->add_option("--weights", o.weights, "Weight-system file (default: uniform, one level)");

  auto* cex = app.add_subcommand("counterexample", "Build and verify a counterexample bundle");
  cex->add_option("--family", o.family, "Family")->required()->check(CLI::IsMember({"cycle", "threepan", "fourpath"}));
  cex->add_option("--weights", o.weights, "Weight-system file (default: uniform on --players)");
  cex->add_option("--players", o.players, "Player count when no weight file is given")->check(CLI::Range(4, 16));
  cex->add_option("--roles", o.roles, "Players taking roles 1,2,3,4 (threepan, fourpath)");
  cex->add_option("--cycle", o.cycle, "Cycle as an ordered player list (cycle family; default 1..n)");
  cex->add_option("--lstar", o.lstar, "Cycle node whose neighbours are not linked (default: first top-priority node)");
  cex->add_option("--chord", o.chords, "Extra edge 'i,j' on the cycle; repeatable");

  auto* fuzz = app.add_subcommand("fuzz", "Search for games whose restriction breaks the inequality");
  fuzz->add_option("--graph", o.graph, "Graph file")->required();
  fuzz->add_option("--weights", o.weights, "Weight-system file (default: uniform, one level)");
  fuzz->add_option("--trials", o.trials, "Random trials")->check(CLI::NonNegativeNumber);
  fuzz->add_option("--seed", o.seed, "Seed");
  fuzz->add_flag("--no-corpus", o.no_corpus, "Skip the pattern-based bundles and run random trials only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (*value) return cmd_value(o);
    if (*check) return cmd_check(o);
    if (*restrict_cmd) return cmd_restrict(o);
    if (*diag) return cmd_diagnose(o);
    if (*cex) return cmd_counterexample(o);
    return cmd_fuzz(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DimensionError& e) {
    std::cerr << "dimension mismatch: " << e.what() << "\n";
    return kDimension;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
