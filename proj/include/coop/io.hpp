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

#ifndef COOP_IO_HPP
#define COOP_IO_HPP

#include <json.hpp>
#include <string>

#include "coop/coalition.hpp"
#include "coop/convexity.hpp"
#include "coop/counterexamples.hpp"
#include "coop/game.hpp"
#include "coop/graph.hpp"
#include "coop/shapley.hpp"
#include "coop/structure.hpp"
#include "coop/weights.hpp"

namespace coop {

using Json = nlohmann::ordered_json;

// Reads and parses a JSON file; throws ParseError on I/O or syntax failure.
Json load_json_file(const std::string& path);

// "1,3,4" (1-based, any order, blanks allowed); "" is the empty coalition.
Coalition parse_player_list(const std::string& text, int n);
std::string player_list_key(Coalition s);
Json coalition_to_json(Coalition s);  // sorted 1-based array

Json rational_to_json(const Rational& r, bool decimal = false);
Rational rational_from_json(const Json& j);

TuGame game_from_json(const Json& j);
Json game_to_json(const TuGame& v);

WeightSystem weights_from_json(const Json& j);
Json weights_to_json(const WeightSystem& ws);

Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

Allocation allocation_from_json(const Json& j, int n);
Json allocation_to_json(const Allocation& x, bool decimal = false);

Json violation_to_json(const Violation& v, bool decimal = false);
Json report_to_json(const ConvexityReport& r, bool decimal = false);
Json triple_report_to_json(const WeakSuperadditivityReport& r, bool decimal = false);
Json diagnosis_to_json(const Diagnosis& d);
Json bundle_to_json(const CounterexampleBundle& b, bool decimal = false);
CounterexampleBundle bundle_from_json(const Json& j);

}  // namespace coop

#endif  // COOP_IO_HPP
