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

#ifndef UNICITY_FINGERPRINT_H_
#define UNICITY_FINGERPRINT_H_

#include <span>
#include <string>
#include <vector>

#include "unicity/common.h"
#include "unicity/trace_model.h"

namespace unicity {

// Order used to rank a user's domains before taking the first n.
//   kActiveThenLexicographic: visits, then total active seconds (same
//     direction as visits), then domain name ascending.
//   kLexicographic: visits, then domain name ascending.
enum class TieBreak { kActiveThenLexicographic, kLexicographic };

TieBreak ParseTieBreak(const std::string& s);
const char* TieBreakName(TieBreak t);

struct FingerprintOptions {
  TieBreak tie_break = TieBreak::kActiveThenLexicographic;
  // Drop users with fewer than n distinct domains instead of keeping a short
  // fingerprint.
  bool drop_short = false;
};

// A user's n most (or least) visited domains, as a set.
struct Fingerprint {
  UserId user = 0;
  std::vector<DomainId> domains;  // sorted ascending; compare as a set
  int n_requested = 1;
  Direction direction = Direction::kMostVisited;

  bool same_set(const Fingerprint& other) const { return domains == other.domains; }
};

// All of a profile's domains in rank order for `direction`.
std::vector<DomainId> RankDomains(const UserProfile& profile, Direction direction,
                                  TieBreak tie_break = TieBreak::kActiveThenLexicographic);

// Throws std::invalid_argument if n < 1.
Fingerprint TopNFingerprint(const UserProfile& profile, int n,
                            TieBreak tie_break = TieBreak::kActiveThenLexicographic);
Fingerprint BottomNFingerprint(const UserProfile& profile, int n,
                               TieBreak tie_break = TieBreak::kActiveThenLexicographic);
Fingerprint MakeFingerprint(const UserProfile& profile, int n, Direction direction,
                            TieBreak tie_break = TieBreak::kActiveThenLexicographic);

// Ranks every user once and cuts fingerprints of any length from the ranking.
class FingerprintExtractor {
 public:
  FingerprintExtractor(const TraceStore& store, Direction direction,
                       FingerprintOptions options = {});

  // One fingerprint per user in user-id order (users with fewer than n
  // domains omitted when drop_short is set).
  std::vector<Fingerprint> Extract(int n) const;

  Direction direction() const { return direction_; }

 private:
  Direction direction_;
  FingerprintOptions options_;
  std::vector<std::vector<DomainId>> ranked_;
};

std::vector<Fingerprint> ExtractFingerprints(const TraceStore& store, int n,
                                             Direction direction,
                                             FingerprintOptions options = {});

}  // namespace unicity

#endif  // UNICITY_FINGERPRINT_H_
