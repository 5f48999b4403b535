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

// Helpers and brute-force reference implementations shared by the tests.
// None of these call into the library's analysis code.

#ifndef UNICITY_TESTS_TEST_UTIL_H_
#define UNICITY_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "unicity/fingerprint.h"
#include "unicity/trace_model.h"

namespace unicity::testing {

// One aggregated visit record: `visits` events of `active` seconds total.
struct Visit {
  std::string user;
  std::string domain;
  int visits = 1;
  std::uint32_t active = 0;
};

// Spreads each record's active seconds over its events, one hour apart.
inline TraceStore StoreFromVisits(const std::vector<Visit>& visits) {
  TraceBuilder builder;
  std::map<std::string, std::int64_t> clock;
  for (const Visit& v : visits) {
    std::int64_t& t = clock[v.user];
    for (int i = 0; i < v.visits; ++i) {
      const std::uint32_t share =
          v.active / v.visits + (i < static_cast<int>(v.active % v.visits) ? 1 : 0);
      builder.Add(v.user, 1538384400 + t, v.domain, share);
      t += 3600;
    }
  }
  return std::move(builder).Build();
}

inline Fingerprint Fp(UserId user, std::vector<DomainId> domains, int n = 0) {
  std::sort(domains.begin(), domains.end());
  Fingerprint fp;
  fp.user = user;
  fp.n_requested = n > 0 ? n : static_cast<int>(std::max<std::size_t>(1, domains.size()));
  fp.domains = std::move(domains);
  return fp;
}

// Random fingerprints over a small alphabet so that collisions happen.
inline std::vector<Fingerprint> RandomFingerprints(std::mt19937_64& rng, std::size_t users,
                                                   std::size_t alphabet, int max_len) {
  std::vector<Fingerprint> fps;
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<DomainId> dom(0, static_cast<DomainId>(alphabet - 1));
  for (std::size_t u = 0; u < users; ++u) {
    std::set<DomainId> s;
    const int l = len(rng);
    while (static_cast<int>(s.size()) < l && s.size() < alphabet) s.insert(dom(rng));
    fps.push_back(Fp(static_cast<UserId>(u), {s.begin(), s.end()}, max_len));
  }
  return fps;
}

// Unique iff non-empty and no other user holds an equal set. O(N^2).
inline std::vector<bool> PairwiseUnique(const std::vector<std::set<std::uint32_t>>& sets) {
  std::vector<bool> unique(sets.size(), false);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) continue;
    bool alone = true;
    for (std::size_t j = 0; j < sets.size() && alone; ++j) {
      if (i != j && sets[i] == sets[j]) alone = false;
    }
    unique[i] = alone;
  }
  return unique;
}

inline std::vector<std::set<std::uint32_t>> AsSets(const std::vector<Fingerprint>& fps) {
  std::vector<std::set<std::uint32_t>> sets;
  for (const auto& fp : fps) sets.emplace_back(fp.domains.begin(), fp.domains.end());
  return sets;
}

inline double PairwiseRate(const std::vector<std::set<std::uint32_t>>& sets) {
  const auto u = PairwiseUnique(sets);
  return static_cast<double>(std::count(u.begin(), u.end(), true)) /
         static_cast<double>(sets.size());
}

// Jackknife by literally dropping each user and recomputing from scratch.
inline double NaiveJackknife(const std::vector<std::set<std::uint32_t>>& sets) {
  const std::size_t n = sets.size();
  std::vector<double> theta;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::set<std::uint32_t>> rest;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) rest.push_back(sets[j]);
    }
    theta.push_back(PairwiseRate(rest));
  }
  const double mean = std::accumulate(theta.begin(), theta.end(), 0.0) / n;
  double ss = 0.0;
  for (double t : theta) ss += (t - mean) * (t - mean);
  return std::sqrt(static_cast<double>(n - 1) / n * ss);
}

// Expected identification steps over every ordering of the target's
// domains. Orders that never isolate the target are left out; `never` is the
// fraction of such orders.
struct EnumeratedSteps {
  double mean = 0.0;
  double variance = 0.0;
  double never = 0.0;
};

inline EnumeratedSteps EnumerateSteps(const std::vector<std::set<std::uint32_t>>& sets,
                                      std::size_t target) {
  std::vector<std::uint32_t> order(sets[target].begin(), sets[target].end());
  std::vector<int> steps;
  std::size_t total = 0;
  do {
    ++total;
    std::set<std::uint32_t> prefix;
    for (std::size_t l = 0; l < order.size(); ++l) {
      prefix.insert(order[l]);
      bool isolated = true;
      for (std::size_t j = 0; j < sets.size() && isolated; ++j) {
        if (j == target) continue;
        if (std::includes(sets[j].begin(), sets[j].end(), prefix.begin(), prefix.end())) {
          isolated = false;
        }
      }
      if (isolated) {
        steps.push_back(static_cast<int>(l + 1));
        break;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  EnumeratedSteps out;
  out.never = 1.0 - static_cast<double>(steps.size()) / static_cast<double>(total);
  if (steps.empty()) return out;
  out.mean = std::accumulate(steps.begin(), steps.end(), 0.0) / steps.size();
  for (int s : steps) out.variance += (s - out.mean) * (s - out.mean);
  out.variance /= steps.size();
  return out;
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("unicity_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace unicity::testing

#endif  // UNICITY_TESTS_TEST_UTIL_H_
