//
// Copyright 2026 The Unicity Authors
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
//

#include "unicity/reident.h"

#include <algorithm>
#include <cmath>

#include "unicity/kernels.h"
#include "unicity/parallel.h"

namespace unicity {

ClockMode ParseClockMode(const std::string& s) {
  if (s == "active") return ClockMode::kActiveTime;
  if (s == "wall") return ClockMode::kWallClock;
  throw ConfigError("unknown clock '" + s + "' (expected active|wall)");
}

const char* ClockModeName(ClockMode m) {
  return m == ClockMode::kActiveTime ? "active" : "wall";
}

MatchStrategy ParseMatchStrategy(const std::string& s) {
  if (s == "exact") return MatchStrategy::kExact;
  if (s == "overlap") return MatchStrategy::kOverlap;
  throw ConfigError("unknown strategy '" + s + "' (expected exact|overlap)");
}

const char* MatchStrategyName(MatchStrategy s) {
  return s == MatchStrategy::kExact ? "exact" : "overlap";
}

SlicePair SplitByActiveTime(const TraceStore& store, double t_hours,
                            ClockMode clock) {
  if (!(t_hours > 0.0) || !std::isfinite(t_hours)) {
    throw ConfigError("slice length must be a positive number of hours");
  }
  const double budget = t_hours * 3600.0;
  std::vector<Event> first, second;
  SlicePair pair;
  pair.t_hours = t_hours;
  pair.clock = clock;
  for (std::size_t u = 0; u < store.user_count(); ++u) {
    const auto events = store.user_events(static_cast<UserId>(u));
    if (events.empty()) {
      ++pair.ineligible_users;
      continue;
    }
    double total = 0.0;
    if (clock == ClockMode::kActiveTime) {
      for (const Event& e : events) {
        const double before = total;
        total += e.active_seconds;
        if (before < budget) {
          first.push_back(e);
        } else if (before < 2.0 * budget) {
          second.push_back(e);
        }
      }
    } else {
      const std::int64_t start = events.front().timestamp;
      for (const Event& e : events) {
        const double elapsed = static_cast<double>(e.timestamp - start);
        if (elapsed < budget) {
          first.push_back(e);
        } else if (elapsed < 2.0 * budget) {
          second.push_back(e);
        }
      }
      total = static_cast<double>(events.back().timestamp - start);
    }
    if (total >= 2.0 * budget) {
      pair.eligible_users.push_back(static_cast<UserId>(u));
    } else {
      ++pair.ineligible_users;
    }
  }
  pair.slice1 = store.WithEvents(std::move(first));
  pair.slice2 = store.WithEvents(std::move(second));
  return pair;
}

SlicePair DuplicatedSlices(const TraceStore& store) {
  SlicePair pair;
  pair.slice1 = store;
  pair.slice2 = store;
  for (std::size_t u = 0; u < store.user_count(); ++u) {
    pair.eligible_users.push_back(static_cast<UserId>(u));
  }
  return pair;
}

namespace {

std::vector<Fingerprint> EligibleFingerprints(const TraceStore& slice,
                                              std::span<const UserId> eligible,
                                              int n, FingerprintOptions options) {
  std::vector<Fingerprint> out;
  out.reserve(eligible.size());
  for (UserId u : eligible) {
    out.push_back(MakeFingerprint(slice.profile(u), n, Direction::kMostVisited,
                                  options.tie_break));
  }
  return out;
}

}  // namespace

ReidentResult ReidentificationRate(const SlicePair& pair, int n,
                                   MatchStrategy strategy,
                                   FingerprintOptions options, unsigned threads) {
  if (n < 1) throw ConfigError("fingerprint length must be >= 1");
  const std::size_t count = pair.eligible_users.size();
  if (count == 0) {
    throw DataError("no eligible users for t=" + std::to_string(pair.t_hours) + "h");
  }
  // Index i refers to eligible_users[i] in both slices.
  const auto first = EligibleFingerprints(pair.slice1, pair.eligible_users, n, options);
  const auto second = EligibleFingerprints(pair.slice2, pair.eligible_users, n, options);

  ReidentResult r;
  r.t_hours = pair.t_hours;
  r.n = n;
  r.strategy = strategy;
  r.eligible_count = count;

  // 0 = success, 1 = matched wrong, 2 = unmatched.
  std::vector<std::uint8_t> verdict(count, 2);

  if (strategy == MatchStrategy::kExact) {
    std::vector<std::uint32_t> order(count);
    for (std::uint32_t i = 0; i < count; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (second[a].domains != second[b].domains) {
        return second[a].domains < second[b].domains;
      }
      return a < b;
    });
    ParallelFor(count, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto& key = first[i].domains;
        if (key.empty()) continue;
        auto lo = std::lower_bound(order.begin(), order.end(), key,
                                   [&](std::uint32_t v, const std::vector<DomainId>& k) {
                                     return second[v].domains < k;
                                   });
        auto hi = lo;
        while (hi != order.end() && second[*hi].domains == key) ++hi;
        if (hi - lo == 1) verdict[i] = (*lo == i) ? 0 : 1;
      }
    });
  } else {
    DomainId max_domain = 0;
    for (const auto& fp : second) {
      for (DomainId d : fp.domains) max_domain = std::max(max_domain, d);
    }
    std::vector<std::vector<std::uint32_t>> postings(max_domain + 1);
    for (std::uint32_t v = 0; v < count; ++v) {
      for (DomainId d : second[v].domains) postings[d].push_back(v);
    }
    ParallelFor(count, threads, [&](std::size_t begin, std::size_t end) {
      std::vector<std::uint32_t> overlap(count, 0);
      std::vector<std::uint32_t> touched;
      for (std::size_t i = begin; i < end; ++i) {
        touched.clear();
        for (DomainId d : first[i].domains) {
          if (d >= postings.size()) continue;
          for (std::uint32_t v : postings[d]) {
            if (overlap[v]++ == 0) touched.push_back(v);
          }
        }
        if (!touched.empty()) {
          const std::uint32_t best = kernels::MaxValue(overlap);
          if (kernels::CountEqual(overlap, best) == 1) {
            const std::size_t v = kernels::FindFirstEqual(overlap, best);
            verdict[i] = (v == i) ? 0 : 1;
          }
        }
        for (std::uint32_t v : touched) overlap[v] = 0;
      }
    });
  }

  for (std::uint8_t v : verdict) {
    if (v == 0) ++r.successes;
    if (v == 1) ++r.matched_wrong;
    if (v == 2) ++r.unmatched;
  }
  const double p = static_cast<double>(r.successes) / static_cast<double>(count);
  r.success_rate = p;
  if (count >= 2) r.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(count - 1));
  return r;
}

std::vector<ReidentResult> ReidentCurve(const TraceStore& store,
                                        std::span<const double> t_hours,
                                        std::span<const int> n_list,
                                        const ReidentOptions& options) {
  if (t_hours.empty() || n_list.empty()) {
    throw ConfigError("re-identification needs at least one t and one n");
  }
  std::vector<ReidentResult> out;
  out.reserve(t_hours.size() * n_list.size());
  for (double t : t_hours) {
    const SlicePair pair = SplitByActiveTime(store, t, options.clock);
    for (int n : n_list) {
      out.push_back(ReidentificationRate(pair, n, options.strategy,
                                         options.fingerprint, options.threads));
    }
  }
  return out;
}

}  // namespace unicity
