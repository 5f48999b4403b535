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

// Uniqueness when only visits to the globally top-k domains are observed.

#ifndef UNICITY_SPARSE_H_
#define UNICITY_SPARSE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "unicity/fingerprint.h"
#include "unicity/trace_model.h"
#include "unicity/uniqueness.h"

namespace unicity {

enum class RankBy { kVisits, kDistinctVisitors };

RankBy ParseRankBy(const std::string& s);
const char* RankByName(RankBy r);

struct RankedDomain {
  DomainId domain = 0;
  std::uint64_t total = 0;

  friend bool operator==(const RankedDomain&, const RankedDomain&) = default;
};

// Ordered by total descending, then domain name ascending. Covers every
// domain with at least one event.
struct DomainRanking {
  RankBy rank_by = RankBy::kVisits;
  std::vector<RankedDomain> entries;
};

// Throws DataError for a store without events.
DomainRanking GlobalRanking(const TraceStore& store,
                            RankBy rank_by = RankBy::kVisits);

// Keeps only events on the first k ranked domains. Users left without events
// stay in the store with empty profiles. Throws ConfigError for k < 1.
TraceStore RestrictTopK(const TraceStore& store, const DomainRanking& ranking,
                        std::size_t k);
TraceStore RestrictTopK(const TraceStore& store, std::size_t k);

struct SparseCell {
  std::size_t k = 0;
  UniquenessResult result;  // empty restricted profiles count as non-unique
  std::size_t empty_profiles = 0;
  std::uint64_t retained_visits = 0;
};

struct SparseOptions {
  RankBy rank_by = RankBy::kVisits;
  FingerprintOptions fingerprint;
  unsigned threads = 1;
};

// Every (k, n) pair, k-major.
std::vector<SparseCell> SparseUniqueness(const TraceStore& store,
                                         std::span<const std::size_t> k_list,
                                         std::span<const int> n_list,
                                         const SparseOptions& options = {});

}  // namespace unicity

#endif  // UNICITY_SPARSE_H_
