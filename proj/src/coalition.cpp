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

#include "coop/coalition.hpp"

namespace coop {

std::vector<int> Coalition::players() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_player(mask, [&](int i) { out.push_back(i); });
  return out;
}

std::string format(Coalition s) {
  std::string out = "{";
  bool first = true;
  for_each_player(s.mask, [&](int i) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  });
  out += '}';
  return out;
}

}  // namespace coop
