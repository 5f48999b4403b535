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

#include <algorithm>
#include <stdexcept>

namespace unicity {

TieBreak ParseTieBreak(const std::string& s) {
  if (s == "active") return TieBreak::kActiveThenLexicographic;
  if (s == "lexicographic") return TieBreak::kLexicographic;
  throw ConfigError("unknown tie-break '" + s + "' (expected active|lexicographic)");
}

const char* TieBreakName(TieBreak t) {
  return t == TieBreak::kActiveThenLexicographic ? "active" : "lexicographic";
}

std::vector<DomainId> RankDomains(const UserProfile& profile, Direction direction,
                                  TieBreak tie_break) {
  std::vector<const DomainStat*> stats;
  stats.reserve(profile.domains.size());
  for (const auto& d : profile.domains) stats.push_back(&d);
  const bool most = direction == Direction::kMostVisited;
  const bool use_active = tie_break == TieBreak::kActiveThenLexicographic;
  std::sort(stats.begin(), stats.end(), [&](const DomainStat* a, const DomainStat* b) {
    if (a->visits != b->visits) return most ? a->visits > b->visits : a->visits < b->visits;
    if (use_active && a->active_seconds != b->active_seconds) {
      return most ? a->active_seconds > b->active_seconds
                  : a->active_seconds < b->active_seconds;
    }
    return a->domain < b->domain;
  });
  std::vector<DomainId> out;
  out.reserve(stats.size());
  for (const DomainStat* s : stats) out.push_back(s->domain);
  return out;
}

namespace {

Fingerprint FromRanking(UserId user, const std::vector<DomainId>& ranked, int n,
                        Direction direction) {
  Fingerprint fp;
  fp.user = user;
  fp.n_requested = n;
  fp.direction = direction;
  const std::size_t take = std::min(ranked.size(), static_cast<std::size_t>(n));
  fp.domains.assign(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(take));
  std::sort(fp.domains.begin(), fp.domains.end());
  return fp;
}

void CheckN(int n) {
  if (n < 1) throw std::invalid_argument("fingerprint length must be >= 1");
}

}  // namespace

Fingerprint MakeFingerprint(const UserProfile& profile, int n, Direction direction,
                            TieBreak tie_break) {
  CheckN(n);
  return FromRanking(profile.user, RankDomains(profile, direction, tie_break), n,
                     direction);
}

Fingerprint TopNFingerprint(const UserProfile& profile, int n, TieBreak tie_break) {
  return MakeFingerprint(profile, n, Direction::kMostVisited, tie_break);
}

Fingerprint BottomNFingerprint(const UserProfile& profile, int n, TieBreak tie_break) {
  return MakeFingerprint(profile, n, Direction::kLeastVisited, tie_break);
}

FingerprintExtractor::FingerprintExtractor(const TraceStore& store,
                                           Direction direction,
                                           FingerprintOptions options)
    : direction_(direction), options_(options) {
  ranked_.reserve(store.user_count());
  for (const auto& p : store.profiles()) {
    ranked_.push_back(RankDomains(p, direction, options.tie_break));
  }
}

std::vector<Fingerprint> FingerprintExtractor::Extract(int n) const {
  CheckN(n);
  std::vector<Fingerprint> out;
  out.reserve(ranked_.size());
  for (std::size_t u = 0; u < ranked_.size(); ++u) {
    if (options_.drop_short && ranked_[u].size() < static_cast<std::size_t>(n)) {
      continue;
    }
    out.push_back(FromRanking(static_cast<UserId>(u), ranked_[u], n, direction_));
  }
  return out;
}

std::vector<Fingerprint> ExtractFingerprints(const TraceStore& store, int n,
                                             Direction direction,
                                             FingerprintOptions options) {
  return FingerprintExtractor(store, direction, options).Extract(n);
}

}  // namespace unicity
