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

#ifndef COOP_PARALLEL_HPP
#define COOP_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace coop {

// Worker count: COOP_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Runs body(i) for every i in [0, count). Iterations are handed out in
// increasing order from a shared counter; body must be safe to run
// concurrently. Falls back to a plain loop for one worker or tiny counts.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace coop

#endif  // COOP_PARALLEL_HPP
