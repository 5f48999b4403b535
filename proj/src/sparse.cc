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

#include "unicity/sparse.h"

#include <algorithm>

namespace unicity {

RankBy ParseRankBy(const std::string& s) {
  if (s == "visits") return RankBy::kVisits;
  if (s == "visitors") return RankBy::kDistinctVisitors;
  throw ConfigError("unknown ranking '" + s + "' (expected visits|visitors)");
}

const char* RankByName(RankBy r) {
  return r == RankBy::kVisits ? "visits" : "visitors";
}

DomainRanking GlobalRanking(const TraceStore& store, RankBy rank_by) {
  if (store.event_count() == 0) throw DataError("cannot rank domains of an empty store");
  std::vector<std::uint64_t> totals(store.domains().size(), 0);
  for (const auto& p : store.profiles()) {
    for (const auto& d : p.domains) {
      totals[d.domain] += rank_by == RankBy::kVisits ? d.visits : 1;
    }
  }
  DomainRanking ranking;
  ranking.rank_by = rank_by;
  for (std::size_t d = 0; d < totals.size(); ++d) {
    if (totals[d] > 0) ranking.entries.push_back({static_cast<DomainId>(d), totals[d]});
  }
  // Domain ids follow name order, so the id breaks ties lexicographically.
  std::sort(ranking.entries.begin(), ranking.entries.end(),
            [](const RankedDomain& a, const RankedDomain& b) {
              if (a.total != b.total) return a.total > b.total;
              return a.domain < b.domain;
            });
  return ranking;
}

TraceStore RestrictTopK(const TraceStore& store, const DomainRanking& ranking,
                        std::size_t k) {
  if (k < 1) throw ConfigError("k must be >= 1");
  std::vector<bool> keep(store.domains().size(), false);
  const std::size_t take = std::min(k, ranking.entries.size());
  for (std::size_t i = 0; i < take; ++i) keep[ranking.entries[i].domain] = true;
  std::vector<Event> events;
  events.reserve(store.event_count());
  for (const Event& e : store.events()) {
    if (keep[e.domain]) events.push_back(e);
  }
  return store.WithEvents(std::move(events));
}

TraceStore RestrictTopK(const TraceStore& store, std::size_t k) {
  return RestrictTopK(store, GlobalRanking(store), k);
}

std::vector<SparseCell> SparseUniqueness(const TraceStore& store,
                                         std::span<const std::size_t> k_list,
                                         std::span<const int> n_list,
                                         const SparseOptions& options) {
  if (k_list.empty() || n_list.empty()) {
    throw ConfigError("sparse tracking needs at least one k and one n");
  }
  const DomainRanking ranking = GlobalRanking(store, options.rank_by);
  std::vector<SparseCell> out;
  out.reserve(k_list.size() * n_list.size());
  for (std::size_t k : k_list) {
    const TraceStore restricted = RestrictTopK(store, ranking, k);
    std::size_t empty = 0;
    for (const auto& p : restricted.profiles()) empty += p.empty();
    const auto curve = UniquenessCurve(restricted, n_list, Direction::kMostVisited,
                                       options.fingerprint, options.threads);
    for (const auto& r : curve) {
      SparseCell cell;
      cell.k = k;
      cell.result = r;
      cell.empty_profiles = empty;
      cell.retained_visits = restricted.event_count();
      out.push_back(std::move(cell));
    }
  }
  return out;
}

}  // namespace unicity
