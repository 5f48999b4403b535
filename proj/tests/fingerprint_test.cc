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

#include "unicity/fingerprint.h"

#include <gtest/gtest.h>

#include <random>

#include "test_util.h"

namespace unicity {
namespace {

using testing::StoreFromVisits;
using testing::Visit;

std::vector<std::string> Names(const TraceStore& store, const Fingerprint& fp) {
  std::vector<std::string> out;
  for (DomainId d : fp.domains) out.push_back(store.domains().name(d));
  return out;
}

using V = std::vector<std::string>;

TEST(TopN, StrictCounts) {
  TraceStore s = StoreFromVisits({{"u", "a", 5, 5}, {"u", "b", 3, 3}, {"u", "c", 1, 1}});
  EXPECT_EQ(Names(s, TopNFingerprint(s.profile(0), 2)), (V{"a", "b"}));
}

TEST(TopN, TieBrokenByActiveSeconds) {
  TraceStore s = StoreFromVisits({{"u", "a", 5, 100}, {"u", "b", 5, 200}, {"u", "c", 1, 1}});
  EXPECT_EQ(Names(s, TopNFingerprint(s.profile(0), 1)), (V{"b"}));
  EXPECT_EQ(Names(s, TopNFingerprint(s.profile(0), 1, TieBreak::kLexicographic)), (V{"a"}));
}

TEST(TopN, FewerDomainsThanN) {
  TraceStore s = StoreFromVisits({{"u", "a", 5, 5}, {"u", "b", 3, 3}});
  const Fingerprint fp = TopNFingerprint(s.profile(0), 4);
  EXPECT_EQ(Names(s, fp), (V{"a", "b"}));
  EXPECT_EQ(fp.n_requested, 4);
}

TEST(BottomN, Examples) {
  TraceStore s = StoreFromVisits({{"u", "a", 5, 5}, {"u", "b", 3, 3}, {"u", "c", 1, 1}});
  EXPECT_EQ(Names(s, BottomNFingerprint(s.profile(0), 2)), (V{"b", "c"}));
  TraceStore t = StoreFromVisits({{"u", "a", 1, 10}, {"u", "b", 1, 5}});
  EXPECT_EQ(Names(t, BottomNFingerprint(t.profile(0), 1)), (V{"b"}));
  TraceStore one = StoreFromVisits({{"u", "a", 5, 5}});
  EXPECT_EQ(Names(one, BottomNFingerprint(one.profile(0), 2)), (V{"a"}));
}

TEST(Fingerprint, RejectsNonPositiveN) {
  TraceStore s = StoreFromVisits({{"u", "a"}});
  EXPECT_THROW(MakeFingerprint(s.profile(0), 0, Direction::kMostVisited), std::invalid_argument);
}

std::vector<Visit> RandomVisits(std::mt19937_64& rng, int users, int domains) {
  std::vector<Visit> v;
  for (int u = 0; u < users; ++u) {
    const int k = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < k; ++i) {
      v.push_back({"u" + std::to_string(u), "d" + std::to_string(rng() % domains),
                   1 + static_cast<int>(rng() % 4), static_cast<std::uint32_t>(rng() % 50)});
    }
  }
  return v;
}

TEST(Fingerprint, PrefixProperty) {
  std::mt19937_64 rng(11);
  TraceStore s = StoreFromVisits(RandomVisits(rng, 40, 30));
  for (Direction dir : {Direction::kMostVisited, Direction::kLeastVisited}) {
    FingerprintExtractor ex(s, dir);
    for (int n = 1; n < 12; ++n) {
      const auto small = ex.Extract(n);
      const auto big = ex.Extract(n + 1);
      for (std::size_t i = 0; i < small.size(); ++i) {
        EXPECT_TRUE(std::includes(big[i].domains.begin(), big[i].domains.end(),
                                  small[i].domains.begin(), small[i].domains.end()));
        EXPECT_EQ(small[i].domains.size(),
                  std::min<std::size_t>(n, s.profile(small[i].user).domains.size()));
      }
    }
  }
}

TEST(Fingerprint, ScaleInvarianceAndFullOverlap) {
  std::mt19937_64 rng(12);
  auto visits = RandomVisits(rng, 25, 20);
  TraceStore base = StoreFromVisits(visits);
  for (auto& v : visits) {
    v.visits *= 3;
    v.active *= 3;
  }
  TraceStore scaled = StoreFromVisits(visits);
  for (int n = 1; n <= 6; ++n) {
    const auto a = ExtractFingerprints(base, n, Direction::kMostVisited);
    const auto b = ExtractFingerprints(scaled, n, Direction::kMostVisited);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].domains, b[i].domains);
  }
  const auto top = ExtractFingerprints(base, 50, Direction::kMostVisited);
  const auto bottom = ExtractFingerprints(base, 50, Direction::kLeastVisited);
  for (std::size_t i = 0; i < top.size(); ++i) EXPECT_TRUE(top[i].same_set(bottom[i]));
}

TEST(Fingerprint, DropShortRemovesUsers) {
  TraceStore s = StoreFromVisits({{"u1", "a"}, {"u1", "b"}, {"u2", "a"}});
  FingerprintOptions opts;
  opts.drop_short = true;
  const auto fps = ExtractFingerprints(s, 2, Direction::kMostVisited, opts);
  ASSERT_EQ(fps.size(), 1u);
  EXPECT_EQ(fps[0].user, 0u);
}

}  // namespace
}  // namespace unicity
