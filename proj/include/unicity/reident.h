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

// Cross-time re-identification: fingerprints from one per-user time slice
// are matched against fingerprints from the next slice of equal length.

#ifndef UNICITY_REIDENT_H_
#define UNICITY_REIDENT_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "unicity/fingerprint.h"
#include "unicity/trace_model.h"

namespace unicity {

// What "t hours of browsing" measures.
//   kActiveTime: cumulative active_seconds of the user's events.
//   kWallClock: elapsed time since the user's first event.
enum class ClockMode { kActiveTime, kWallClock };

ClockMode ParseClockMode(const std::string& s);
const char* ClockModeName(ClockMode m);

struct SlicePair {
  double t_hours = 0.0;
  ClockMode clock = ClockMode::kActiveTime;
  TraceStore slice1;
  TraceStore slice2;
  std::vector<UserId> eligible_users;  // sorted
  std::size_t ineligible_users = 0;
};

// Walks each user's events in order. With the budget T = t * 3600 s, an event
// goes to slice 1 if the time accumulated before it is < T, to slice 2 if it
// is in [T, 2T), and is dropped otherwise. Users with less than 2T in total
// are kept in the slices but are not eligible for scoring. Throws
// ConfigError unless t_hours > 0.
SlicePair SplitByActiveTime(const TraceStore& store, double t_hours,
                            ClockMode clock = ClockMode::kActiveTime);

// Both slices are the whole store and every user is eligible.
SlicePair DuplicatedSlices(const TraceStore& store);

enum class MatchStrategy { kExact, kOverlap };

MatchStrategy ParseMatchStrategy(const std::string& s);
const char* MatchStrategyName(MatchStrategy s);

struct ReidentResult {
  double t_hours = 0.0;
  int n = 1;
  MatchStrategy strategy = MatchStrategy::kOverlap;
  double success_rate = 0.0;
  double standard_error = 0.0;  // sqrt(p (1 - p) / (N - 1))
  std::size_t eligible_count = 0;
  std::size_t successes = 0;
  std::size_t matched_wrong = 0;  // a single best candidate that was someone else
  std::size_t unmatched = 0;      // no candidate, or a tie between candidates
};

// Scores every eligible user u with slice-1 fingerprint F1(u) against the
// slice-2 fingerprints of eligible users.
//   kExact: success iff u is the only user whose F2 equals F1(u).
//   kOverlap: the user maximizing |F1(u) ∩ F2(v)|; success iff it is unique,
//     the overlap is >= 1 and it is u.
// Throws DataError when no user is eligible.
ReidentResult ReidentificationRate(const SlicePair& pair, int n,
                                   MatchStrategy strategy,
                                   FingerprintOptions options = {},
                                   unsigned threads = 1);

struct ReidentOptions {
  MatchStrategy strategy = MatchStrategy::kOverlap;
  ClockMode clock = ClockMode::kActiveTime;
  FingerprintOptions fingerprint;
  unsigned threads = 1;
};

// Every (t, n) pair, t-major.
std::vector<ReidentResult> ReidentCurve(const TraceStore& store,
                                        std::span<const double> t_hours,
                                        std::span<const int> n_list,
                                        const ReidentOptions& options = {});

}  // namespace unicity

#endif  // UNICITY_REIDENT_H_
