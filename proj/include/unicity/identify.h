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

// Step-by-step identification: draw a user's fingerprint domains in random
// order and count how many are needed before only that user holds all of
// them.

#ifndef UNICITY_IDENTIFY_H_
#define UNICITY_IDENTIFY_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unicity/fingerprint.h"
#include "unicity/trace_model.h"
#include "unicity/uniqueness.h"

namespace unicity {

inline constexpr int kDefaultRepetitions = 300;
// Domains of one fingerprint are tracked as bits of a 64-bit mask.
inline constexpr int kMaxIdentifyLength = 64;

// Who the target must be separated from.
enum class CandidatePool { kAllUsers, kUniqueUsers };

CandidatePool ParseCandidatePool(const std::string& s);
const char* CandidatePoolName(CandidatePool p);

struct IdentificationOutcome {
  UserId user = 0;
  double mean_steps = 0.0;  // over successful runs; 0 if every run failed
  int repetitions = 0;
  int failures = 0;  // runs that used every domain without isolating the user
  std::vector<std::uint32_t> step_counts;  // [l - 1] = runs isolated at step l

  int successes() const { return repetitions - failures; }
  // Unbiased sample variance of l over successful runs (0 with < 2 runs).
  double step_variance() const;
};

// Inverted index over a fixed fingerprint population, reused for every
// target. Read-only after construction.
class IdentificationEngine {
 public:
  explicit IdentificationEngine(std::span<const Fingerprint> fingerprints,
                                CandidatePool pool = CandidatePool::kAllUsers);

  std::size_t size() const { return fingerprints_.size(); }
  const Fingerprint& fingerprint(std::size_t i) const { return fingerprints_[i]; }
  bool IsUnique(std::size_t i) const { return classes_.IsUnique(i); }

  // For each competing user holding at least one of the target's domains,
  // the bitmask of target domain positions (bit j = target.domains[j]) that
  // user also holds. Sorted, duplicates removed.
  std::vector<std::uint64_t> CompetitorMasks(std::size_t target) const;

  // Runs the random narrowing `repetitions` times with an RNG seeded by
  // `stream_seed`. Throws DataError if the target is not unique.
  IdentificationOutcome Run(std::size_t target, int repetitions,
                            std::uint64_t stream_seed) const;

 private:
  std::vector<Fingerprint> fingerprints_;
  FingerprintClasses classes_;
  CandidatePool pool_;
  std::vector<std::vector<std::uint32_t>> postings_;  // domain -> fp indices
};

// Single-target entry point. The per-user stream is derived from `seed` and
// `user_key` (callers pass the user's name), so a user's result does not
// depend on which other users are scored or in what order.
IdentificationOutcome IdentificationSteps(
    UserId target, std::span<const Fingerprint> fingerprints, int repetitions,
    std::uint64_t seed, std::string_view user_key,
    CandidatePool pool = CandidatePool::kAllUsers);

struct IdentifyOptions {
  CandidatePool pool = CandidatePool::kAllUsers;
  FingerprintOptions fingerprint;
  double bin_width = 0.25;
  unsigned threads = 1;
};

struct HistogramBin {
  double lower = 0.0;
  double upper = 0.0;  // exclusive, except the last bin
  std::size_t users = 0;
};

struct StepsDistribution {
  int n = 0;
  int repetitions = 0;
  std::uint64_t seed = 0;
  CandidatePool pool = CandidatePool::kAllUsers;
  std::size_t population = 0;
  std::size_t unique_users = 0;
  std::size_t excluded_non_unique = 0;
  std::size_t failed_users = 0;     // unique users with zero successful runs
  std::size_t failed_runs = 0;
  double population_mean = 0.0;     // mean of per-user mean_steps
  double population_se = 0.0;       // standard error of that mean
  std::vector<IdentificationOutcome> outcomes;  // unique users, user-id order
  std::vector<HistogramBin> histogram;
};

// Runs the procedure for every unique user. Results are identical for any
// thread count. Throws DataError when no user is unique.
StepsDistribution ComputeStepsDistribution(const TraceStore& store, int n,
                                           int repetitions, std::uint64_t seed,
                                           const IdentifyOptions& options = {});

}  // namespace unicity

#endif  // UNICITY_IDENTIFY_H_
