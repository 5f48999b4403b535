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

#include "unicity/identify.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "unicity/kernels.h"
#include "unicity/parallel.h"
#include "unicity/random.h"

namespace unicity {

CandidatePool ParseCandidatePool(const std::string& s) {
  if (s == "all") return CandidatePool::kAllUsers;
  if (s == "unique") return CandidatePool::kUniqueUsers;
  throw ConfigError("unknown candidate pool '" + s + "' (expected all|unique)");
}

const char* CandidatePoolName(CandidatePool p) {
  return p == CandidatePool::kAllUsers ? "all" : "unique";
}

double IdentificationOutcome::step_variance() const {
  const int k = successes();
  if (k < 2) return 0.0;
  double sum = 0.0, sum_sq = 0.0;
  for (std::size_t i = 0; i < step_counts.size(); ++i) {
    const double l = static_cast<double>(i + 1);
    sum += l * step_counts[i];
    sum_sq += l * l * step_counts[i];
  }
  const double mean = sum / k;
  return (sum_sq - k * mean * mean) / (k - 1);
}

IdentificationEngine::IdentificationEngine(
    std::span<const Fingerprint> fingerprints, CandidatePool pool)
    : fingerprints_(fingerprints.begin(), fingerprints.end()),
      classes_(fingerprints),
      pool_(pool) {
  DomainId max_domain = 0;
  for (const auto& fp : fingerprints_) {
    for (DomainId d : fp.domains) max_domain = std::max(max_domain, d);
  }
  postings_.resize(fingerprints_.empty() ? 0 : max_domain + 1);
  for (std::size_t i = 0; i < fingerprints_.size(); ++i) {
    for (DomainId d : fingerprints_[i].domains) {
      postings_[d].push_back(static_cast<std::uint32_t>(i));
    }
  }
}

std::vector<std::uint64_t> IdentificationEngine::CompetitorMasks(
    std::size_t target) const {
  const auto& domains = fingerprints_.at(target).domains;
  if (domains.size() > static_cast<std::size_t>(kMaxIdentifyLength)) {
    throw ConfigError("identification supports fingerprints of at most 64 domains");
  }
  // Sparse accumulation: most users share none of the target's domains.
  std::vector<std::pair<std::uint32_t, std::uint64_t>> hits;
  for (std::size_t j = 0; j < domains.size(); ++j) {
    for (std::uint32_t v : postings_[domains[j]]) {
      if (v == target) continue;
      if (pool_ == CandidatePool::kUniqueUsers && !classes_.IsUnique(v)) continue;
      hits.emplace_back(v, std::uint64_t{1} << j);
    }
  }
  std::sort(hits.begin(), hits.end());
  std::vector<std::uint64_t> masks;
  for (std::size_t i = 0; i < hits.size();) {
    std::uint64_t m = 0;
    const std::uint32_t v = hits[i].first;
    for (; i < hits.size() && hits[i].first == v; ++i) m |= hits[i].second;
    masks.push_back(m);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

IdentificationOutcome IdentificationEngine::Run(std::size_t target,
                                                int repetitions,
                                                std::uint64_t stream_seed) const {
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (target >= fingerprints_.size()) throw std::out_of_range("target index");
  if (!classes_.IsUnique(target)) {
    throw DataError("target not uniquely identifiable at this n");
  }
  const auto masks = CompetitorMasks(target);
  const std::size_t k = fingerprints_[target].domains.size();

  IdentificationOutcome out;
  out.user = fingerprints_[target].user;
  out.repetitions = repetitions;
  out.step_counts.assign(k, 0);

  Rng rng(stream_seed);
  std::vector<std::uint8_t> order(k);
  std::uint64_t total_steps = 0;
  for (int rep = 0; rep < repetitions; ++rep) {
    std::iota(order.begin(), order.end(), std::uint8_t{0});
    rng.Shuffle(std::span<std::uint8_t>(order));
    std::uint64_t drawn = 0;
    std::size_t steps = 0;
    for (std::size_t s = 0; s < k; ++s) {
      drawn |= std::uint64_t{1} << order[s];
      if (!kernels::AnySuperset(masks, drawn)) {
        steps = s + 1;
        break;
      }
    }
    if (steps == 0) {
      ++out.failures;
    } else {
      ++out.step_counts[steps - 1];
      total_steps += steps;
    }
  }
  if (out.successes() > 0) {
    out.mean_steps = static_cast<double>(total_steps) / out.successes();
  }
  return out;
}

IdentificationOutcome IdentificationSteps(
    UserId target, std::span<const Fingerprint> fingerprints, int repetitions,
    std::uint64_t seed, std::string_view user_key, CandidatePool pool) {
  auto it = std::find_if(fingerprints.begin(), fingerprints.end(),
                         [&](const Fingerprint& f) { return f.user == target; });
  if (it == fingerprints.end()) {
    throw std::invalid_argument("target has no fingerprint in the population");
  }
  const IdentificationEngine engine(fingerprints, pool);
  return engine.Run(static_cast<std::size_t>(it - fingerprints.begin()),
                    repetitions, StreamSeed(seed, user_key));
}

StepsDistribution ComputeStepsDistribution(const TraceStore& store, int n,
                                           int repetitions, std::uint64_t seed,
                                           const IdentifyOptions& options) {
  if (n < 1) throw ConfigError("fingerprint length must be >= 1");
  if (n > kMaxIdentifyLength) {
    throw ConfigError("identification supports n <= 64");
  }
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  if (!(options.bin_width > 0.0)) throw ConfigError("bin width must be > 0");

  const auto fps = ExtractFingerprints(store, n, Direction::kMostVisited,
                                       options.fingerprint);
  const IdentificationEngine engine(fps, options.pool);

  StepsDistribution dist;
  dist.n = n;
  dist.repetitions = repetitions;
  dist.seed = seed;
  dist.pool = options.pool;
  dist.population = fps.size();

  std::vector<std::size_t> targets;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    if (engine.IsUnique(i)) targets.push_back(i);
  }
  dist.unique_users = targets.size();
  dist.excluded_non_unique = fps.size() - targets.size();
  if (targets.empty()) throw DataError("no unique users at n=" + std::to_string(n));

  dist.outcomes.resize(targets.size());
  ParallelFor(targets.size(), options.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const std::size_t i = targets[t];
      const auto& name = store.users().name(fps[i].user);
      dist.outcomes[t] = engine.Run(i, repetitions, StreamSeed(seed, name));
    }
  });

  const std::size_t bins =
      static_cast<std::size_t>(std::floor((n - 1) / options.bin_width)) + 1;
  dist.histogram.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    dist.histogram[b].lower = 1.0 + b * options.bin_width;
    dist.histogram[b].upper = 1.0 + (b + 1) * options.bin_width;
  }
  std::vector<double> means;
  for (const auto& o : dist.outcomes) {
    dist.failed_runs += static_cast<std::size_t>(o.failures);
    if (o.successes() == 0) {
      ++dist.failed_users;
      continue;
    }
    means.push_back(o.mean_steps);
    const auto b = std::min<std::size_t>(
        bins - 1,
        static_cast<std::size_t>(std::floor((o.mean_steps - 1.0) / options.bin_width)));
    ++dist.histogram[b].users;
  }
  if (!means.empty()) {
    double sum = 0.0;
    for (double m : means) sum += m;
    dist.population_mean = sum / static_cast<double>(means.size());
    if (means.size() >= 2) {
      double ss = 0.0;
      for (double m : means) ss += (m - dist.population_mean) * (m - dist.population_mean);
      const double var = ss / static_cast<double>(means.size() - 1);
      dist.population_se = std::sqrt(var / static_cast<double>(means.size()));
    }
  }
  return dist;
}

}  // namespace unicity
