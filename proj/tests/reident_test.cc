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

#include <gtest/gtest.h>

#include <map>

#include "test_util.h"
#include "unicity/synthgen.h"
#include "unicity/uniqueness.h"

namespace unicity {
namespace {

TEST(Split, HourLongEvents) {
  TraceBuilder b;
  b.Add("u", 0, "a", 3600);
  b.Add("u", 4000, "b", 3600);
  b.Add("u", 8000, "c", 3600);
  const TraceStore store = std::move(b).Build();
  const SlicePair pair = SplitByActiveTime(store, 1.0);
  ASSERT_EQ(pair.slice1.event_count(), 1u);
  ASSERT_EQ(pair.slice2.event_count(), 1u);
  EXPECT_EQ(pair.slice1.domains().name(pair.slice1.events()[0].domain), "a");
  EXPECT_EQ(pair.slice2.domains().name(pair.slice2.events()[0].domain), "b");
  EXPECT_EQ(pair.eligible_users, std::vector<UserId>{0});
}

TEST(Split, TooLittleActiveTimeIsIneligible) {
  TraceBuilder b;
  b.Add("u", 0, "a", 2500);
  b.Add("u", 10, "b", 2500);
  const TraceStore store = std::move(b).Build();
  const SlicePair pair = SplitByActiveTime(store, 1.0);
  EXPECT_TRUE(pair.eligible_users.empty());
  EXPECT_EQ(pair.ineligible_users, 1u);
  EXPECT_THROW(SplitByActiveTime(store, 0.0), ConfigError);
}

TEST(Split, SlicesAreDisjointAndContiguous) {
  SynthParams p;
  p.users = 80;
  p.domains = 300;
  p.events_per_user_mean = 400;
  const TraceStore store = GenerateStore(p);
  for (double t : {0.5, 1.0, 2.0}) {
    const SlicePair pair = SplitByActiveTime(store, t);
    for (std::size_t u = 0; u < store.user_count(); ++u) {
      const auto all = store.user_events(static_cast<UserId>(u));
      const auto s1 = pair.slice1.user_events(static_cast<UserId>(u));
      const auto s2 = pair.slice2.user_events(static_cast<UserId>(u));
      // slice1 is a prefix of the user's events and slice2 follows right after.
      ASSERT_LE(s1.size() + s2.size(), all.size());
      for (std::size_t i = 0; i < s1.size(); ++i) EXPECT_EQ(s1[i], all[i]);
      for (std::size_t i = 0; i < s2.size(); ++i) EXPECT_EQ(s2[i], all[s1.size() + i]);
      if (!s1.empty() && !s2.empty()) EXPECT_LE(s1.back().timestamp, s2.front().timestamp);
      std::uint64_t active1 = 0;
      for (const Event& e : s1) active1 += e.active_seconds;
      if (!s2.empty()) EXPECT_GE(active1, t * 3600.0);
    }
  }
}

// u1: F1{a,b} F2{a,c}; u2: F1{d,e} F2{d,e}.
SlicePair TwoUserPair() {
  TraceBuilder b;
  auto add = [&](const char* u, std::int64_t ts, const char* d) { b.Add(u, ts, d, 900); };
  add("u1", 0, "a"), add("u1", 1, "a"), add("u1", 2, "b"), add("u1", 3, "b");
  add("u1", 10, "a"), add("u1", 11, "a"), add("u1", 12, "c"), add("u1", 13, "c");
  add("u2", 0, "d"), add("u2", 1, "d"), add("u2", 2, "e"), add("u2", 3, "e");
  add("u2", 10, "d"), add("u2", 11, "d"), add("u2", 12, "e"), add("u2", 13, "e");
  return SplitByActiveTime(std::move(b).Build(), 1.0);
}

TEST(ReidentificationRate, ExactVersusOverlap) {
  const SlicePair pair = TwoUserPair();
  ASSERT_EQ(pair.eligible_users.size(), 2u);
  const auto exact = ReidentificationRate(pair, 2, MatchStrategy::kExact);
  EXPECT_DOUBLE_EQ(exact.success_rate, 0.5);
  EXPECT_EQ(exact.successes, 1u);
  const auto overlap = ReidentificationRate(pair, 2, MatchStrategy::kOverlap);
  EXPECT_DOUBLE_EQ(overlap.success_rate, 1.0);
}

TEST(ReidentificationRate, DuplicatedSlicesAreAlwaysMatched) {
  SynthParams p;
  p.users = 150;
  p.domains = 2000;
  p.events_per_user_mean = 200;
  const TraceStore store = GenerateStore(p);
  const SlicePair pair = DuplicatedSlices(store);
  for (int n : {4, 6, 10}) {
    const auto fps = ExtractFingerprints(store, n, Direction::kMostVisited);
    if (UniquenessRate(fps) < 1.0) continue;
    for (MatchStrategy s : {MatchStrategy::kExact, MatchStrategy::kOverlap}) {
      EXPECT_EQ(ReidentificationRate(pair, n, s).success_rate, 1.0);
    }
  }
}

TEST(ReidentificationRate, InvariantToUserRelabeling) {
  SynthParams p;
  p.users = 60;
  p.domains = 500;
  p.events_per_user_mean = 300;
  const SynthData data = Generate(p);
  std::vector<BrowsingEvent> renamed = data.events;
  for (auto& e : renamed) e.user_id = "zz" + std::string(e.user_id.rbegin(), e.user_id.rend());
  const TraceStore a = TraceStore::FromEvents(data.events);
  const TraceStore b = TraceStore::FromEvents(renamed);
  for (MatchStrategy s : {MatchStrategy::kExact, MatchStrategy::kOverlap}) {
    const auto ra = ReidentificationRate(SplitByActiveTime(a, 1.0), 5, s);
    const auto rb = ReidentificationRate(SplitByActiveTime(b, 1.0), 5, s);
    EXPECT_EQ(ra.successes, rb.successes);
    EXPECT_EQ(ra.eligible_count, rb.eligible_count);
  }
}

TEST(ReidentificationRate, ThreadsDoNotMatter) {
  SynthParams p;
  p.users = 100;
  p.domains = 800;
  p.events_per_user_mean = 300;
  const TraceStore store = GenerateStore(p);
  const SlicePair pair = SplitByActiveTime(store, 1.0);
  const auto a = ReidentificationRate(pair, 5, MatchStrategy::kOverlap, {}, 1);
  const auto b = ReidentificationRate(pair, 5, MatchStrategy::kOverlap, {}, 3);
  EXPECT_EQ(a.successes, b.successes);
  EXPECT_EQ(a.matched_wrong, b.matched_wrong);
  EXPECT_EQ(a.successes + a.matched_wrong + a.unmatched, a.eligible_count);
}

TEST(ReidentCurve, ShapeFollowsInputs) {
  SynthParams p;
  p.users = 50;
  p.domains = 300;
  p.events_per_user_mean = 400;
  const TraceStore store = GenerateStore(p);
  const std::vector<double> t = {0.5, 1.0};
  const std::vector<int> n = {2, 4, 6};
  const auto curve = ReidentCurve(store, t, n);
  ASSERT_EQ(curve.size(), 6u);
  EXPECT_EQ(curve[4].t_hours, 1.0);
  EXPECT_EQ(curve[4].n, 4);
}

}  // namespace
}  // namespace unicity
