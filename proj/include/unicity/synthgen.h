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

// Seeded synthetic clickstreams: Zipf-distributed global domain popularity
// mixed with a small per-user habit set that the user revisits.

#ifndef UNICITY_SYNTHGEN_H_
#define UNICITY_SYNTHGEN_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "unicity/trace_model.h"

namespace unicity {

struct SynthParams {
  std::size_t users = 1000;
  std::size_t domains = 10000;
  double zipf_exponent = 1.1;         // popularity of rank r is ~ r^-s
  double habit_size_mean = 8.0;       // Poisson mean, at least 1 habit domain
  double habit_weight = 0.7;          // P(visit goes to the habit set)
  double events_per_user_mean = 500;  // log-normal mean
  double events_log_sigma = 1.0;      // log-normal shape
  double session_gap_seconds = 1800;  // mean idle gap between visits
  double dwell_mean_seconds = 60;     // mean active seconds per visit
  std::uint64_t seed = 42;
  // Give every user a private block of habit domains instead of Zipf draws.
  // Requires users * ceil(habit_size_mean) <= domains.
  bool disjoint_habits = false;

  // Throws ConfigError on any out-of-range field.
  void Validate() const;
};

// Inverse-CDF sampler over ranks 1..n with P(r) proportional to r^-s.
class ZipfSampler {
 public:
  ZipfSampler(std::size_t n, double exponent);
  // Rank in [0, n), 0 = most popular, from a uniform draw in [0, 1).
  std::size_t Sample(double uniform) const;
  double Probability(std::size_t rank) const;

 private:
  std::vector<double> cdf_;
};

// Name of the domain at a popularity rank: "site00001.example", ...; zero
// padding keeps name order equal to rank order.
std::string SynthDomainName(std::size_t rank, std::size_t domain_count);
std::string SynthUserName(std::size_t index, std::size_t user_count);

using SynthEventSink = std::function<void(const std::string& user,
                                          std::int64_t timestamp,
                                          const std::string& domain,
                                          std::uint32_t active_seconds)>;

// Emits events ordered by (user, timestamp). Users are generated in parallel
// from per-user streams; output is identical for any thread count.
void GenerateEvents(const SynthParams& params, const SynthEventSink& sink,
                    std::vector<Demographics>* demographics = nullptr,
                    unsigned threads = 1);

struct SynthData {
  std::vector<BrowsingEvent> events;
  std::vector<Demographics> demographics;
};

SynthData Generate(const SynthParams& params, unsigned threads = 1);

// Generated straight into an interned store (with demographics).
TraceStore GenerateStore(const SynthParams& params, unsigned threads = 1);

}  // namespace unicity

#endif  // UNICITY_SYNTHGEN_H_
