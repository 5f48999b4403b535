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

#include "unicity/synthgen.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "unicity/parallel.h"
#include "unicity/random.h"

namespace unicity {
namespace {

// 2018-10-01T00:00:00Z
constexpr std::int64_t kEpochStart = 1538352000;
constexpr std::size_t kUsersPerBlock = 64;

struct CompactEvent {
  std::uint32_t rank;
  std::uint32_t active;
  std::int64_t timestamp;
};

std::string Padded(std::size_t value, std::size_t max_value) {
  const std::size_t width = std::to_string(max_value).size();
  std::string digits = std::to_string(value);
  return std::string(width - std::min(width, digits.size()), '0') + digits;
}

}  // namespace

void SynthParams::Validate() const {
  auto fail = [](const std::string& what) { throw ConfigError("synth: " + what); };
  if (users < 1) fail("users must be >= 1");
  if (domains < 1) fail("domains must be >= 1");
  if (domains > 0xffffffffULL) fail("too many domains");
  if (!(zipf_exponent > 0.0) || !std::isfinite(zipf_exponent)) fail("zipf_exponent must be > 0");
  if (!(habit_size_mean > 0.0) || !std::isfinite(habit_size_mean)) fail("habit_size_mean must be > 0");
  if (!(habit_weight >= 0.0 && habit_weight <= 1.0)) fail("habit_weight must be in [0, 1]");
  if (!(events_per_user_mean > 0.0) || !std::isfinite(events_per_user_mean)) {
    fail("events_per_user_mean must be > 0");
  }
  if (!(events_log_sigma >= 0.0) || !std::isfinite(events_log_sigma)) fail("events_log_sigma must be >= 0");
  if (!(session_gap_seconds > 0.0) || !std::isfinite(session_gap_seconds)) {
    fail("session_gap_seconds must be > 0");
  }
  if (!(dwell_mean_seconds > 0.0) || !std::isfinite(dwell_mean_seconds)) {
    fail("dwell_mean_seconds must be > 0");
  }
  if (disjoint_habits) {
    const auto per_user = static_cast<std::size_t>(std::ceil(habit_size_mean));
    if (users * per_user > domains) {
      fail("disjoint habits need users * ceil(habit_size_mean) <= domains");
    }
  }
}

ZipfSampler::ZipfSampler(std::size_t n, double exponent) : cdf_(n) {
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    total += std::pow(static_cast<double>(r + 1), -exponent);
    cdf_[r] = total;
  }
  for (double& c : cdf_) c /= total;
  cdf_.back() = 1.0;
}

std::size_t ZipfSampler::Sample(double uniform) const {
  const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), uniform);
  return std::min<std::size_t>(static_cast<std::size_t>(it - cdf_.begin()),
                               cdf_.size() - 1);
}

double ZipfSampler::Probability(std::size_t rank) const {
  return rank == 0 ? cdf_[0] : cdf_[rank] - cdf_[rank - 1];
}

std::string SynthDomainName(std::size_t rank, std::size_t domain_count) {
  return "site" + Padded(rank + 1, domain_count) + ".example";
}

std::string SynthUserName(std::size_t index, std::size_t user_count) {
  return "u" + Padded(index + 1, user_count);
}

namespace {

std::vector<CompactEvent> GenerateUser(const SynthParams& p, const ZipfSampler& zipf,
                                       std::size_t index, const std::string& name,
                                       Demographics* demo) {
  Rng rng(StreamSeed(p.seed, name));

  std::vector<std::uint32_t> habits;
  if (p.disjoint_habits) {
    const auto h = static_cast<std::size_t>(std::ceil(p.habit_size_mean));
    for (std::size_t j = 0; j < h; ++j) {
      habits.push_back(static_cast<std::uint32_t>(index * h + j));
    }
  } else {
    const std::size_t h = std::min<std::size_t>(
        p.domains, std::max<std::uint64_t>(1, rng.Poisson(p.habit_size_mean)));
    std::unordered_set<std::uint32_t> seen;
    // Popular domains repeat often under Zipf; fall back to uniform picks so
    // the loop always terminates.
    std::size_t attempts = 0;
    while (habits.size() < h) {
      const auto rank = static_cast<std::uint32_t>(
          attempts < 64 * h ? zipf.Sample(rng.Uniform()) : rng.Below(p.domains));
      ++attempts;
      if (seen.insert(rank).second) habits.push_back(rank);
    }
  }

  const double sigma = p.events_log_sigma;
  const double mu = std::log(p.events_per_user_mean) - 0.5 * sigma * sigma;
  const double draw = std::exp(mu + sigma * rng.Normal());
  const auto count = static_cast<std::size_t>(std::max(1.0, std::round(draw)));

  std::vector<CompactEvent> events;
  events.reserve(count);
  std::int64_t ts = kEpochStart + static_cast<std::int64_t>(rng.Below(86400));
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t rank;
    if (rng.Uniform() < p.habit_weight) {
      rank = habits[rng.Below(habits.size())];
    } else {
      rank = static_cast<std::uint32_t>(zipf.Sample(rng.Uniform()));
    }
    const auto active = static_cast<std::uint32_t>(
        std::min(86400.0, std::round(rng.Exponential(p.dwell_mean_seconds))));
    events.push_back({rank, active, ts});
    const auto gap = static_cast<std::int64_t>(
        std::max(1.0, std::round(rng.Exponential(p.session_gap_seconds))));
    ts += active + gap;
  }

  if (demo != nullptr) {
    const double g = rng.Uniform();
    demo->user_id = name;
    demo->gender = g < 0.49 ? Gender::kMale : (g < 0.98 ? Gender::kFemale : Gender::kOtherUnknown);
    demo->age = 18 + static_cast<int>(rng.Below(63));
  }
  return events;
}

}  // namespace

void GenerateEvents(const SynthParams& params, const SynthEventSink& sink,
                    std::vector<Demographics>* demographics, unsigned threads) {
  params.Validate();
  const ZipfSampler zipf(params.domains, params.zipf_exponent);
  std::vector<std::string> domain_names(params.domains);
  for (std::size_t r = 0; r < params.domains; ++r) {
    domain_names[r] = SynthDomainName(r, params.domains);
  }
  if (demographics != nullptr) demographics->clear();

  for (std::size_t block = 0; block < params.users; block += kUsersPerBlock * std::max(1u, threads)) {
    const std::size_t block_end =
        std::min(params.users, block + kUsersPerBlock * std::max(1u, threads));
    const std::size_t size = block_end - block;
    std::vector<std::string> names(size);
    std::vector<std::vector<CompactEvent>> streams(size);
    std::vector<Demographics> demo(size);
    for (std::size_t i = 0; i < size; ++i) names[i] = SynthUserName(block + i, params.users);
    ParallelFor(size, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t i = begin; i < end; ++i) {
        streams[i] = GenerateUser(params, zipf, block + i, names[i], &demo[i]);
      }
    });
    for (std::size_t i = 0; i < size; ++i) {
      for (const auto& e : streams[i]) {
        sink(names[i], e.timestamp, domain_names[e.rank], e.active);
      }
      if (demographics != nullptr) demographics->push_back(std::move(demo[i]));
    }
  }
}

SynthData Generate(const SynthParams& params, unsigned threads) {
  SynthData data;
  GenerateEvents(
      params,
      [&](const std::string& user, std::int64_t ts, const std::string& domain,
          std::uint32_t active) {
        data.events.push_back({user, std::chrono::sys_seconds(std::chrono::seconds(ts)),
                               domain, active});
      },
      &data.demographics, threads);
  return data;
}

TraceStore GenerateStore(const SynthParams& params, unsigned threads) {
  TraceBuilder builder;
  std::vector<Demographics> demo;
  GenerateEvents(
      params,
      [&](const std::string& user, std::int64_t ts, const std::string& domain,
          std::uint32_t active) { builder.Add(user, ts, domain, active); },
      &demo, threads);
  DemographicsTable table;
  for (auto& d : demo) {
    std::string key = d.user_id;
    table.emplace(std::move(key), std::move(d));
  }
  return std::move(builder).Build(&table);
}

}  // namespace unicity
