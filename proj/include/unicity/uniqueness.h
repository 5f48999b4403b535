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

// Population uniqueness of fingerprints with jackknife standard errors.

#ifndef UNICITY_UNIQUENESS_H_
#define UNICITY_UNIQUENESS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unicity/fingerprint.h"
#include "unicity/trace_model.h"

namespace unicity {

struct GroupStat {
  double unique_fraction = 0.0;
  double standard_error = 0.0;
  std::size_t group_size = 0;
  std::size_t unique_count = 0;
};

struct UniquenessResult {
  int n = 1;
  Direction direction = Direction::kMostVisited;
  double unique_fraction = 0.0;
  double standard_error = 0.0;
  std::size_t population_size = 0;
  std::size_t unique_count = 0;
  std::size_t empty_fingerprints = 0;
  std::optional<std::map<std::string, GroupStat>> per_group;
};

// Users grouped by identical domain sets. An empty fingerprint is never
// unique, however many users share it.
class FingerprintClasses {
 public:
  explicit FingerprintClasses(std::span<const Fingerprint> fingerprints);

  std::size_t population() const { return class_of_.size(); }
  std::size_t class_count() const { return members_.size(); }
  std::uint32_t class_of(std::size_t i) const { return class_of_[i]; }
  std::span<const std::uint32_t> members(std::uint32_t cls) const {
    return members_[cls];
  }
  std::size_t class_size(std::uint32_t cls) const { return members_[cls].size(); }
  bool is_empty_class(std::uint32_t cls) const { return empty_[cls]; }

  bool IsUnique(std::size_t i) const {
    const std::uint32_t c = class_of_[i];
    return members_[c].size() == 1 && !empty_[c];
  }
  std::size_t unique_count() const { return unique_count_; }
  std::size_t empty_count() const { return empty_count_; }

 private:
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<bool> empty_;
  std::size_t unique_count_ = 0;
  std::size_t empty_count_ = 0;
};

// Fraction of users whose domain set occurs exactly once. Throws DataError
// ("empty population") for an empty list.
double UniquenessRate(std::span<const Fingerprint> fingerprints);

// Uniqueness with user i removed, for every i, derived from duplicate-class
// sizes: removing a singleton loses one unique user, removing one member of
// a pair makes the other unique, larger classes change nothing but the
// denominator. Requires at least 2 users.
std::vector<double> LeaveOneOutRates(const FingerprintClasses& classes);

// sqrt((N-1)/N * sum_i (theta_i - mean)^2) over leave-one-out statistics.
double JackknifeStandardError(std::span<const double> leave_one_out);

// Throws DataError for fewer than 2 users.
double JackknifeSe(std::span<const Fingerprint> fingerprints);

// Fraction plus jackknife SE (0 when only one user).
UniquenessResult MeasureUniqueness(std::span<const Fingerprint> fingerprints,
                                   int n, Direction direction);

std::vector<UniquenessResult> UniquenessCurve(const TraceStore& store,
                                              std::span<const int> n_range,
                                              Direction direction,
                                              FingerprintOptions options = {},
                                              unsigned threads = 1);

enum class Grouping { kGender, kAgeBracket };
// kGlobal: a member is unique if its fingerprint is unique in the whole
// population. kWithinGroup: uniqueness among the group's members only.
enum class GroupScope { kGlobal, kWithinGroup };

Grouping ParseGrouping(const std::string& s);
const char* GroupingName(Grouping g);

inline constexpr const char* kUngroupedLabel = "ungrouped";

// "18-34", "35-54", "55-80", or empty for ages outside 18..80.
std::string AgeBracket(int age);

UniquenessResult GroupUniqueness(const TraceStore& store, int n,
                                 Grouping grouping,
                                 GroupScope scope = GroupScope::kGlobal,
                                 FingerprintOptions options = {},
                                 Direction direction = Direction::kMostVisited);

}  // namespace unicity

#endif  // UNICITY_UNIQUENESS_H_
