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

#include "unicity/uniqueness.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "unicity/parallel.h"

namespace unicity {

FingerprintClasses::FingerprintClasses(std::span<const Fingerprint> fingerprints)
    : class_of_(fingerprints.size()) {
  std::vector<std::uint32_t> order(fingerprints.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (fingerprints[a].domains != fingerprints[b].domains) {
      return fingerprints[a].domains < fingerprints[b].domains;
    }
    return a < b;
  });
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::uint32_t idx = order[i];
    if (i == 0 || fingerprints[order[i - 1]].domains != fingerprints[idx].domains) {
      members_.emplace_back();
      empty_.push_back(fingerprints[idx].domains.empty());
    }
    const auto cls = static_cast<std::uint32_t>(members_.size() - 1);
    members_.back().push_back(idx);
    class_of_[idx] = cls;
  }
  for (std::size_t c = 0; c < members_.size(); ++c) {
    if (empty_[c]) {
      empty_count_ += members_[c].size();
    } else if (members_[c].size() == 1) {
      ++unique_count_;
    }
  }
}

double UniquenessRate(std::span<const Fingerprint> fingerprints) {
  if (fingerprints.empty()) throw DataError("empty population");
  const FingerprintClasses classes(fingerprints);
  return static_cast<double>(classes.unique_count()) /
         static_cast<double>(classes.population());
}

std::vector<double> LeaveOneOutRates(const FingerprintClasses& classes) {
  const std::size_t n = classes.population();
  if (n < 2) throw DataError("jackknife needs at least 2 users");
  const auto unique = static_cast<double>(classes.unique_count());
  const auto denom = static_cast<double>(n - 1);
  std::vector<double> theta(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t c = classes.class_of(i);
    double count = unique;
    if (!classes.is_empty_class(c)) {
      if (classes.class_size(c) == 1) count -= 1.0;
      if (classes.class_size(c) == 2) count += 1.0;
    }
    theta[i] = count / denom;
  }
  return theta;
}

double JackknifeStandardError(std::span<const double> leave_one_out) {
  const std::size_t n = leave_one_out.size();
  if (n < 2) throw DataError("jackknife needs at least 2 leave-one-out values");
  double mean = 0.0;
  for (double t : leave_one_out) mean += t;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double t : leave_one_out) ss += (t - mean) * (t - mean);
  return std::sqrt(static_cast<double>(n - 1) / static_cast<double>(n) * ss);
}

double JackknifeSe(std::span<const Fingerprint> fingerprints) {
  const FingerprintClasses classes(fingerprints);
  const auto theta = LeaveOneOutRates(classes);
  return JackknifeStandardError(theta);
}

namespace {

UniquenessResult FromClasses(const FingerprintClasses& classes, int n,
                             Direction direction) {
  if (classes.population() == 0) throw DataError("empty population");
  UniquenessResult r;
  r.n = n;
  r.direction = direction;
  r.population_size = classes.population();
  r.unique_count = classes.unique_count();
  r.empty_fingerprints = classes.empty_count();
  r.unique_fraction = static_cast<double>(r.unique_count) /
                      static_cast<double>(r.population_size);
  if (classes.population() >= 2) {
    const auto theta = LeaveOneOutRates(classes);
    r.standard_error = JackknifeStandardError(theta);
  }
  return r;
}

}  // namespace

UniquenessResult MeasureUniqueness(std::span<const Fingerprint> fingerprints,
                                   int n, Direction direction) {
  return FromClasses(FingerprintClasses(fingerprints), n, direction);
}

std::vector<UniquenessResult> UniquenessCurve(const TraceStore& store,
                                              std::span<const int> n_range,
                                              Direction direction,
                                              FingerprintOptions options,
                                              unsigned threads) {
  if (n_range.empty()) throw ConfigError("empty fingerprint-length range");
  const FingerprintExtractor extractor(store, direction, options);
  std::vector<UniquenessResult> out(n_range.size());
  ParallelFor(n_range.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto fps = extractor.Extract(n_range[i]);
      out[i] = MeasureUniqueness(fps, n_range[i], direction);
    }
  });
  return out;
}

Grouping ParseGrouping(const std::string& s) {
  if (s == "gender") return Grouping::kGender;
  if (s == "age" || s == "age_bracket") return Grouping::kAgeBracket;
  throw ConfigError("unknown grouping '" + s + "' (expected gender|age)");
}

const char* GroupingName(Grouping g) {
  return g == Grouping::kGender ? "gender" : "age";
}

std::string AgeBracket(int age) {
  if (age >= 18 && age <= 34) return "18-34";
  if (age >= 35 && age <= 54) return "35-54";
  if (age >= 55 && age <= 80) return "55-80";
  return "";
}

namespace {

std::string GroupLabel(const Demographics* d, Grouping grouping) {
  if (d == nullptr) return kUngroupedLabel;
  if (grouping == Grouping::kGender) return std::string(GenderName(d->gender));
  std::string bracket = AgeBracket(d->age);
  return bracket.empty() ? kUngroupedLabel : bracket;
}

}  // namespace

UniquenessResult GroupUniqueness(const TraceStore& store, int n,
                                 Grouping grouping, GroupScope scope,
                                 FingerprintOptions options,
                                 Direction direction) {
  const auto fps = ExtractFingerprints(store, n, direction, options);
  const FingerprintClasses classes(fps);
  UniquenessResult result = FromClasses(classes, n, direction);

  std::map<std::string, std::vector<std::uint32_t>> groups;
  for (std::size_t i = 0; i < fps.size(); ++i) {
    groups[GroupLabel(store.demographics(fps[i].user), grouping)].push_back(
        static_cast<std::uint32_t>(i));
  }

  std::map<std::string, GroupStat> per_group;
  for (const auto& [label, members] : groups) {
    GroupStat stat;
    stat.group_size = members.size();
    if (scope == GroupScope::kWithinGroup) {
      std::vector<Fingerprint> sub;
      sub.reserve(members.size());
      for (std::uint32_t i : members) sub.push_back(fps[i]);
      const auto r = MeasureUniqueness(sub, n, direction);
      stat.unique_fraction = r.unique_fraction;
      stat.standard_error = r.standard_error;
      stat.unique_count = r.unique_count;
      per_group.emplace(label, stat);
      continue;
    }

    std::vector<bool> in_group(fps.size(), false);
    for (std::uint32_t i : members) {
      in_group[i] = true;
      stat.unique_count += classes.IsUnique(i);
    }
    const double m = static_cast<double>(members.size());
    stat.unique_fraction = static_cast<double>(stat.unique_count) / m;
    if (members.size() >= 2) {
      // Leave out each member from the whole population; only the removed
      // member and, for a pair, its partner can change status.
      std::vector<double> theta;
      theta.reserve(members.size());
      for (std::uint32_t i : members) {
        const std::uint32_t c = classes.class_of(i);
        double count = static_cast<double>(stat.unique_count);
        if (!classes.is_empty_class(c)) {
          if (classes.class_size(c) == 1) count -= 1.0;
          if (classes.class_size(c) == 2) {
            const auto pair = classes.members(c);
            const std::uint32_t partner = pair[0] == i ? pair[1] : pair[0];
            if (in_group[partner]) count += 1.0;
          }
        }
        theta.push_back(count / (m - 1.0));
      }
      stat.standard_error = JackknifeStandardError(theta);
    }
    per_group.emplace(label, stat);
  }
  result.per_group = std::move(per_group);
  return result;
}

}  // namespace unicity
