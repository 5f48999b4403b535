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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "unicity/fingerprint.h"
#include "unicity/uniqueness.h"

namespace unicity {
namespace {

SynthParams Small(std::uint64_t seed = 42) {
  SynthParams p;
  p.users = 100;
  p.domains = 1000;
  p.events_per_user_mean = 120;
  p.seed = seed;
  return p;
}

TEST(Synth, SameSeedSameStream) {
  const SynthData a = Generate(Small(), 1);
  const SynthData b = Generate(Small(), 3);
  EXPECT_EQ(a.events, b.events);
  EXPECT_EQ(a.demographics, b.demographics);
  const SynthData c = Generate(Small(43), 1);
  EXPECT_NE(a.events, c.events);
}

TEST(Synth, RejectsDegenerateParams) {
  SynthParams p = Small();
  p.users = 0;
  EXPECT_THROW(p.Validate(), ConfigError);
  p = Small();
  p.habit_weight = 1.5;
  EXPECT_THROW(p.Validate(), ConfigError);
  p = Small();
  p.domains = 0;
  EXPECT_THROW(Generate(p), ConfigError);
}

TEST(Synth, SingleUserRebuildsProfiles) {
  SynthParams p = Small();
  p.users = 1;
  p.events_per_user_mean = 5;
  const TraceStore store = GenerateStore(p);
  EXPECT_EQ(store.user_count(), 1u);
  EXPECT_TRUE(store.ProfilesConsistent());
}

TEST(Synth, EventsAreChronologicalPerUser) {
  const SynthData d = Generate(Small());
  for (std::size_t i = 1; i < d.events.size(); ++i) {
    if (d.events[i].user_id == d.events[i - 1].user_id) {
      EXPECT_LE(d.events[i - 1].timestamp, d.events[i].timestamp);
    }
  }
}

TEST(Zipf, ProbabilitiesFollowPowerLaw) {
  const ZipfSampler z(1000, 1.1);
  EXPECT_NEAR(z.Probability(0) / z.Probability(9), std::pow(10.0, 1.1), 1e-9);
  double total = 0;
  for (std::size_t r = 0; r < 1000; ++r) total += z.Probability(r);
  EXPECT_NEAR(total, 1.0, 1e-9);
  EXPECT_EQ(z.Sample(0.0), 0u);
  EXPECT_EQ(z.Sample(0.999999999999), 999u);
}

double TopDomainShare(double exponent) {
  SynthParams p = Small();
  p.zipf_exponent = exponent;
  p.habit_weight = 0.0;
  const TraceStore s = GenerateStore(p);
  std::vector<std::uint64_t> visits(s.domains().size());
  for (const Event& e : s.events()) ++visits[e.domain];
  return static_cast<double>(*std::max_element(visits.begin(), visits.end())) /
         static_cast<double>(s.event_count());
}

TEST(Synth, SteeperZipfConcentratesVisits) {
  double previous = 0.0;
  for (double s : {0.6, 0.9, 1.2, 1.5}) {
    const double share = TopDomainShare(s);
    EXPECT_GT(share, previous) << s;
    previous = share;
  }
}

TEST(Synth, DisjointHabitsMakeEveryoneUnique) {
  SynthParams p = Small();
  p.habit_weight = 1.0;
  p.disjoint_habits = true;
  const TraceStore s = GenerateStore(p);
  const auto fps = ExtractFingerprints(s, 1, Direction::kMostVisited);
  EXPECT_EQ(UniquenessRate(fps), 1.0);
}

TEST(Synth, RegressionFixture) {
  SynthParams p;
  p.users = 2000;
  p.domains = 50000;
  p.zipf_exponent = 1.1;
  p.habit_size_mean = 8;
  p.habit_weight = 0.7;
  p.events_per_user_mean = 4000;
  const TraceStore s = GenerateStore(p, 2);
  const auto fps = ExtractFingerprints(s, 4, Direction::kMostVisited);
  const double u = UniquenessRate(fps);
  EXPECT_GE(u, 0.85);
  EXPECT_LE(u, 1.0);
}

TEST(SynthNames, ZeroPadded) {
  EXPECT_EQ(SynthUserName(0, 300), "u001");
  EXPECT_EQ(SynthDomainName(11, 50000), "site00012.example");
}

}  // namespace
}  // namespace unicity
