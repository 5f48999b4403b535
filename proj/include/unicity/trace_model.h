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

// In-memory trace model: events, per-user profiles and demographics.
//
// User ids and domains are interned into sorted dictionaries shared between a
// store and every store derived from it (time slices, top-k restrictions), so
// ids stay comparable across derived stores and id order is name order.

#ifndef UNICITY_TRACE_MODEL_H_
#define UNICITY_TRACE_MODEL_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "unicity/common.h"

namespace unicity {

// One page visit as it appears in a trace file.
struct BrowsingEvent {
  std::string user_id;
  std::chrono::sys_seconds timestamp;
  std::string domain;  // normalized: non-empty, lowercase
  std::uint32_t active_seconds = 0;

  friend bool operator==(const BrowsingEvent&, const BrowsingEvent&) = default;
};

enum class Gender { kMale, kFemale, kOtherUnknown };

std::string_view GenderName(Gender g);

struct Demographics {
  std::string user_id;
  Gender gender = Gender::kOtherUnknown;
  int age = 0;  // [0, 120]

  friend bool operator==(const Demographics&, const Demographics&) = default;
};

using DemographicsTable = std::map<std::string, Demographics>;

// Sorted, duplicate-free list of names; the index of a name is its id.
class Dictionary {
 public:
  Dictionary() = default;
  // Throws std::invalid_argument unless `names` is strictly increasing.
  explicit Dictionary(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t id) const { return names_.at(id); }
  std::span<const std::string> names() const { return names_; }
  std::optional<std::uint32_t> Find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
};

// Interned event. Timestamps are UTC seconds since the epoch.
struct Event {
  UserId user = 0;
  DomainId domain = 0;
  std::int64_t timestamp = 0;
  std::uint32_t active_seconds = 0;

  friend bool operator==(const Event&, const Event&) = default;
};

struct DomainStat {
  DomainId domain = 0;
  std::uint32_t visits = 0;  // >= 1; every event counts, including 0 s dwell
  std::uint64_t active_seconds = 0;

  friend bool operator==(const DomainStat&, const DomainStat&) = default;
};

struct UserProfile {
  UserId user = 0;
  std::vector<DomainStat> domains;  // sorted by domain id
  std::uint64_t total_active_seconds = 0;

  bool empty() const { return domains.empty(); }
  std::uint64_t total_visits() const;
  const DomainStat* Find(DomainId domain) const;

  friend bool operator==(const UserProfile&, const UserProfile&) = default;
};

// Aggregates interned events into one profile per user id in
// [0, user_count). Users without events get empty profiles. The result does
// not depend on event order.
std::vector<UserProfile> BuildProfiles(std::span<const Event> events,
                                       std::size_t user_count,
                                       std::size_t domain_count);

// Immutable after construction; safe to share across reader threads.
class TraceStore {
 public:
  TraceStore();

  // Interns and sorts `events`. Demographics rows for users that do not
  // appear in the events are ignored.
  static TraceStore FromEvents(std::span<const BrowsingEvent> events,
                               const DemographicsTable* demographics = nullptr);

  // Takes interned events over the given dictionaries. Events are stably
  // sorted by (user, timestamp), so equal timestamps keep input order.
  static TraceStore FromInterned(
      std::shared_ptr<const Dictionary> users,
      std::shared_ptr<const Dictionary> domains, std::vector<Event> events,
      std::vector<std::optional<Demographics>> demographics = {});

  // Same dictionaries and demographics, different events.
  TraceStore WithEvents(std::vector<Event> events) const;
  TraceStore WithDemographics(const DemographicsTable& demographics) const;

  const Dictionary& users() const { return *users_; }
  const Dictionary& domains() const { return *domains_; }
  std::shared_ptr<const Dictionary> shared_users() const { return users_; }
  std::shared_ptr<const Dictionary> shared_domains() const { return domains_; }

  std::size_t user_count() const { return users_->size(); }
  std::size_t event_count() const { return events_.size(); }
  // Domains that occur in at least one event of this store.
  std::size_t distinct_domain_count() const { return distinct_domains_; }

  std::span<const Event> events() const { return events_; }
  std::span<const Event> user_events(UserId user) const;
  std::span<const UserProfile> profiles() const { return profiles_; }
  const UserProfile& profile(UserId user) const { return profiles_.at(user); }

  bool has_demographics() const { return !demographics_.empty(); }
  const Demographics* demographics(UserId user) const;
  std::span<const std::optional<Demographics>> demographics_by_user() const {
    return demographics_;
  }

  std::vector<BrowsingEvent> ToBrowsingEvents() const;

  // Rebuilds profiles from the events and compares; used by tests and
  // `validate`.
  bool ProfilesConsistent() const;

 private:
  std::shared_ptr<const Dictionary> users_;
  std::shared_ptr<const Dictionary> domains_;
  std::vector<Event> events_;
  std::vector<std::size_t> offsets_;  // user -> first event, size users+1
  std::vector<UserProfile> profiles_;
  std::vector<std::optional<Demographics>> demographics_;
  std::size_t distinct_domains_ = 0;
};

// Accumulates string-keyed events and interns them on Build(). Used by the
// file readers and the synthetic generator so 10M-row inputs never exist as
// BrowsingEvent strings.
class TraceBuilder {
 public:
  void Add(std::string_view user, std::int64_t timestamp,
           std::string_view domain, std::uint32_t active_seconds);
  void Add(const BrowsingEvent& event);
  std::size_t size() const { return events_.size(); }

  TraceStore Build(const DemographicsTable* demographics = nullptr) &&;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  using InternMap =
      std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>>;

  static std::uint32_t Intern(InternMap& map, std::vector<std::string>& names,
                              std::string_view key);

  InternMap user_ids_;
  InternMap domain_ids_;
  std::vector<std::string> user_names_;
  std::vector<std::string> domain_names_;
  std::vector<Event> events_;
};

}  // namespace unicity

#endif  // UNICITY_TRACE_MODEL_H_
