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

#include "coop/convexity.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>
#include <string>

#include "coop/errors.hpp"
#include "coop/parallel.hpp"

namespace coop {
namespace {

void require_match(const TuGame& v, const WeightSystem& ws) {
  if (v.n() != ws.n()) {
    throw DimensionError("game has " + std::to_string(v.n()) + " players but weight system has " +
                         std::to_string(ws.n()));
  }
}

// Violations for a fixed T, ascending in S, restricted to S inside `allowed`.
void scan_t(const TuGame& v, const WeightSystem& ws, Mask t, Mask allowed, bool collect_all,
            std::vector<Violation>& out) {
  const Mask top = ws.top_mask(t);
  std::vector<Rational> rhs_term(v.n());
  for_each_player(top, [&](int i) { rhs_term[i] = ws.weight(i) * (v[t] - v[t & ~(Mask{1} << i)]); });
  const Mask inner = t & allowed;
  // Ascending proper nonempty submasks of inner, excluding t itself.
  for (Mask s = (0 - inner) & inner; s != 0; s = (s - inner) & inner) {
    if (s == t) continue;
    const Mask active = s & top;
    if (active == 0) continue;
    Rational lhs = 0;
    Rational rhs = 0;
    for_each_player(active, [&](int i) {
      lhs += ws.weight(i) * (v[s] - v[s & ~(Mask{1} << i)]);
      rhs += rhs_term[i];
    });
    if (lhs > rhs) {
      out.push_back(Violation{Coalition(s), Coalition(t), std::move(lhs), std::move(rhs)});
      if (!collect_all) return;
    }
  }
}

ConvexityReport scan(const TuGame& v, const WeightSystem& ws, Mask allowed, bool collect_all) {
  require_match(v, ws);
  const std::size_t count = v.size();
  std::vector<std::vector<Violation>> per_t(count);
  // Smallest T with a violation found so far; larger T can be skipped when
  // only the first violation is wanted.
  std::atomic<Mask> best{std::numeric_limits<Mask>::max()};
  parallel_for(count, [&](std::size_t idx) {
    const Mask t = static_cast<Mask>(idx);
    if (t == 0 || (t & ~allowed) != 0) return;
    if (!collect_all && t > best.load()) return;
    scan_t(v, ws, t, allowed, collect_all, per_t[t]);
    if (!per_t[t].empty() && !collect_all) {
      Mask cur = best.load();
      while (t < cur && !best.compare_exchange_weak(cur, t)) {
      }
    }
  });
  ConvexityReport report;
  for (auto& bucket : per_t) {
    for (auto& viol : bucket) report.violations.push_back(std::move(viol));
    if (!collect_all && !report.violations.empty()) break;
  }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace

ConvexityReport check_weighted_average_convexity(const TuGame& v, const WeightSystem& ws, bool collect_all) {
  return scan(v, ws, v.full_mask(), collect_all);
}

ConvexityReport check_average_convexity(const TuGame& v, bool collect_all) {
  return check_weighted_average_convexity(v, WeightSystem::uniform(v.n()), collect_all);
}

ConvexityReport check_with_null_player_reduction(const TuGame& v, const WeightSystem& ws, bool collect_all) {
  return scan(v, ws, v.full_mask() & ~null_players(v).mask, collect_all);
}

Violation evaluate_pair(const TuGame& v, const WeightSystem& ws, Coalition s, Coalition t) {
  require_match(v, ws);
  Violation out{s, t, Rational(0), Rational(0)};
  const Mask top = ws.top_mask(t.mask);
  for_each_player(s.mask & top, [&](int i) {
    const Mask bit = Mask{1} << i;
    out.lhs += ws.weight(i) * (v[s.mask] - v[s.mask & ~bit]);
    out.rhs += ws.weight(i) * (v[t.mask] - v[t.mask & ~bit]);
  });
  return out;
}

bool core_contains(const TuGame& v, const Allocation& x) {
  if (static_cast<int>(x.size()) != v.n()) {
    throw DimensionError("allocation has " + std::to_string(x.size()) + " entries for " + std::to_string(v.n()) +
                         " players");
  }
  std::vector<Rational> sums(v.size());
  for (Mask s = 1; s < v.size(); ++s) {
    const int low = Coalition(s).lowest();
    sums[s] = sums[s & (s - 1)] + x[low];
  }
  const Mask full = v.full_mask();
  if (sums[full] != v[full]) return false;
  for (Mask s = 1; s < full; ++s) {
    if (sums[s] < v[s]) return false;
  }
  return true;
}

WeakSuperadditivityReport weak_superadditivity_holds(const TuGame& v, const WeightSystem& ws, bool collect_all) {
  require_match(v, ws);
  if (v.n() > kMaxTriplePlayers) {
    throw std::invalid_argument("triple scan limited to " + std::to_string(kMaxTriplePlayers) + " players");
  }
  const Mask full = v.full_mask();
  std::vector<std::vector<TripleViolation>> per_s(v.size());
  std::atomic<Mask> best{std::numeric_limits<Mask>::max()};
  parallel_for(v.size(), [&](std::size_t idx) {
    const Mask s = static_cast<Mask>(idx);
    if (s == 0) return;
    if (!collect_all && s > best.load()) return;
    int min_p = ws.levels() + 1;
    for_each_player(s, [&](int i) { min_p = std::min(min_p, ws.priority(i)); });
    // T may only use players of priority <= min_p outside S; U strictly below.
    const Mask t_pool = full & ~s & ws.at_or_below(min_p);
    auto& out = per_s[s];
    for (Mask t = 0;; t = (t - t_pool) & t_pool) {
      const Rational lhs = v[s | t] - v[t];
      const Mask u_pool = t & ws.at_or_below(min_p - 1);
      for (Mask u = 0;; u = (u - u_pool) & u_pool) {
        const Rational rhs = v[s | u] - v[u];
        if (lhs < rhs) {
          out.push_back(TripleViolation{Coalition(s), Coalition(t), Coalition(u), lhs, rhs});
          if (!collect_all) break;
        }
        if (u == u_pool) break;
      }
      if (!collect_all && !out.empty()) break;
      if (t == t_pool) break;
    }
    if (!out.empty() && !collect_all) {
      Mask cur = best.load();
      while (s < cur && !best.compare_exchange_weak(cur, s)) {
      }
    }
  });
  WeakSuperadditivityReport report;
  for (auto& bucket : per_s) {
    for (auto& viol : bucket) report.violations.push_back(std::move(viol));
    if (!collect_all && !report.violations.empty()) break;
  }
  report.holds = report.violations.empty();
  return report;
}

Theorem1Result theorem1_pipeline(const TuGame& v, const WeightSystem& ws) {
  Theorem1Result out;
  out.is_wac = check_weighted_average_convexity(v, ws).holds;
  out.phi = weighted_shapley_dividends(v, ws);
  out.in_core = core_contains(v, out.phi);
  return out;
}

}  // namespace coop
