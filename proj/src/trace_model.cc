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

#include "unicity/trace_model.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace unicity {

Direction ParseDirection(const std::string& s) {
  if (s == "most" || s == "most_visited") return Direction::kMostVisited;
  if (s == "least" || s == "least_visited") return Direction::kLeastVisited;
  throw ConfigError("unknown direction '" + s + "' (expected most|least)");
}

std::string_view GenderName(Gender g) {
  switch (g) {
    case Gender::kMale:
      return "male";
    case Gender::kFemale:
      return "female";
    case Gender::kOtherUnknown:
      return "other";
  }
  return "other";
}

Dictionary::Dictionary(std::vector<std::string> names)
    : names_(std::move(names)) {
  for (std::size_t i = 1; i < names_.size(); ++i) {
    if (!(names_[i - 1] < names_[i])) {
      throw std::invalid_argument("dictionary names must be strictly sorted");
    }
  }
}

std::optional<std::uint32_t> Dictionary::Find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& a, std::string_view b) {
                               return std::string_view(a) < b;
                             });
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<std::uint32_t>(it - names_.begin());
}

std::uint64_t UserProfile::total_visits() const {
  std::uint64_t total = 0;
  for (const auto& d : domains) total += d.visits;
  return total;
}

const DomainStat* UserProfile::Find(DomainId domain) const {
  auto it = std::lower_bound(
      domains.begin(), domains.end(), domain,
      [](const DomainStat& s, DomainId d) { return s.domain < d; });
  if (it == domains.end() || it->domain != domain) return nullptr;
  return &*it;
}

std::vector<UserProfile> BuildProfiles(std::span<const Event> events,
                                       std::size_t user_count,
                                       std::size_t domain_count) {
  // Bucket event indices by user (counting sort), then aggregate each user
  // with a dense scratch table over domains.
  std::vector<std::size_t> offsets(user_count + 1, 0);
  for (const Event& e : events) {
    if (e.user >= user_count || e.domain >= domain_count) {
      throw std::out_of_range("event id outside dictionary");
    }
    ++offsets[e.user + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<std::uint32_t> domains_by_user(events.size());
  std::vector<std::uint32_t> active_by_user(events.size());
  {
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (const Event& e : events) {
      const std::size_t pos = cursor[e.user]++;
      domains_by_user[pos] = e.domain;
      active_by_user[pos] = e.active_seconds;
    }
  }

  std::vector<UserProfile> profiles(user_count);
  std::vector<std::uint32_t> visits(domain_count, 0);
  std::vector<std::uint64_t> active(domain_count, 0);
  std::vector<DomainId> touched;
  for (std::size_t u = 0; u < user_count; ++u) {
    UserProfile& p = profiles[u];
    p.user = static_cast<UserId>(u);
    touched.clear();
    for (std::size_t i = offsets[u]; i < offsets[u + 1]; ++i) {
      const DomainId d = domains_by_user[i];
      if (visits[d]++ == 0) touched.push_back(d);
      active[d] += active_by_user[i];
      p.total_active_seconds += active_by_user[i];
    }
    std::sort(touched.begin(), touched.end());
    p.domains.reserve(touched.size());
    for (DomainId d : touched) {
      p.domains.push_back({d, visits[d], active[d]});
      visits[d] = 0;
      active[d] = 0;
    }
  }
  return profiles;
}

TraceStore::TraceStore()
    : users_(std::make_shared<Dictionary>()),
      domains_(std::make_shared<Dictionary>()),
      offsets_(1, 0) {}

TraceStore TraceStore::FromEvents(std::span<const BrowsingEvent> events,
                                  const DemographicsTable* demographics) {
  TraceBuilder builder;
  for (const auto& e : events) builder.Add(e);
  return std::move(builder).Build(demographics);
}

TraceStore TraceStore::FromInterned(
    std::shared_ptr<const Dictionary> users,
    std::shared_ptr<const Dictionary> domains, std::vector<Event> events,
    std::vector<std::optional<Demographics>> demographics) {
  TraceStore store;
  store.users_ = std::move(users);
  store.domains_ = std::move(domains);
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) {
                     if (a.user != b.user) return a.user < b.user;
                     return a.timestamp < b.timestamp;
                   });
  store.events_ = std::move(events);
  const std::size_t n_users = store.users_->size();
  store.offsets_.assign(n_users + 1, 0);
  for (const Event& e : store.events_) ++store.offsets_[e.user + 1];
  std::partial_sum(store.offsets_.begin(), store.offsets_.end(),
                   store.offsets_.begin());
  store.profiles_ =
      BuildProfiles(store.events_, n_users, store.domains_->size());

  std::vector<bool> seen(store.domains_->size(), false);
  for (const auto& p : store.profiles_) {
    for (const auto& d : p.domains) {
      if (!seen[d.domain]) {
        seen[d.domain] = true;
        ++store.distinct_domains_;
      }
    }
  }
  if (!demographics.empty()) {
    if (demographics.size() != n_users) {
      throw std::invalid_argument("demographics must cover the user dictionary");
    }
    store.demographics_ = std::move(demographics);
  }
  return store;
}

TraceStore TraceStore::WithEvents(std::vector<Event> events) const {
  return FromInterned(users_, domains_, std::move(events), demographics_);
}

TraceStore TraceStore::WithDemographics(
    const DemographicsTable& demographics) const {
  std::vector<std::optional<Demographics>> by_user(users_->size());
  for (std::size_t u = 0; u < users_->size(); ++u) {
    auto it = demographics.find(users_->name(static_cast<std::uint32_t>(u)));
    if (it != demographics.end()) by_user[u] = it->second;
  }
  TraceStore copy = *this;
  copy.demographics_ = std::move(by_user);
  return copy;
}

std::span<const Event> TraceStore::user_events(UserId user) const {
  if (user >= user_count()) throw std::out_of_range("user id out of range");
  return std::span<const Event>(events_).subspan(
      offsets_[user], offsets_[user + 1] - offsets_[user]);
}

const Demographics* TraceStore::demographics(UserId user) const {
  if (user >= demographics_.size() || !demographics_[user]) return nullptr;
  return &*demographics_[user];
}

std::vector<BrowsingEvent> TraceStore::ToBrowsingEvents() const {
  std::vector<BrowsingEvent> out;
  out.reserve(events_.size());
  for (const Event& e : events_) {
    out.push_back({users_->name(e.user),
                   std::chrono::sys_seconds(std::chrono::seconds(e.timestamp)),
                   domains_->name(e.domain), e.active_seconds});
  }
  return out;
}

bool TraceStore::ProfilesConsistent() const {
  return BuildProfiles(events_, users_->size(), domains_->size()) == profiles_;
}

std::uint32_t TraceBuilder::Intern(InternMap& map,
                                   std::vector<std::string>& names,
                                   std::string_view key) {
  auto it = map.find(key);
  if (it != map.end()) return it->second;
  const auto id = static_cast<std::uint32_t>(names.size());
  names.emplace_back(key);
  map.emplace(names.back(), id);
  return id;
}

void TraceBuilder::Add(std::string_view user, std::int64_t timestamp,
                       std::string_view domain, std::uint32_t active_seconds) {
  const std::uint32_t u = Intern(user_ids_, user_names_, user);
  const std::uint32_t d = Intern(domain_ids_, domain_names_, domain);
  events_.push_back({u, d, timestamp, active_seconds});
}

void TraceBuilder::Add(const BrowsingEvent& event) {
  Add(event.user_id, event.timestamp.time_since_epoch().count(), event.domain,
      event.active_seconds);
}

namespace {

// Sorts `names` and returns old id -> new id.
std::vector<std::uint32_t> SortAndRemap(std::vector<std::string>& names) {
  std::vector<std::uint32_t> order(names.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(),
            [&](std::uint32_t a, std::uint32_t b) { return names[a] < names[b]; });
  std::vector<std::uint32_t> remap(names.size());
  std::vector<std::string> sorted;
  sorted.reserve(names.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = i;
    sorted.push_back(std::move(names[order[i]]));
  }
  names = std::move(sorted);
  return remap;
}

}  // namespace

TraceStore TraceBuilder::Build(const DemographicsTable* demographics) && {
  user_ids_.clear();
  domain_ids_.clear();
  const auto user_remap = SortAndRemap(user_names_);
  const auto domain_remap = SortAndRemap(domain_names_);
  for (Event& e : events_) {
    e.user = user_remap[e.user];
    e.domain = domain_remap[e.domain];
  }
  auto users = std::make_shared<const Dictionary>(std::move(user_names_));
  auto domains = std::make_shared<const Dictionary>(std::move(domain_names_));
  TraceStore store =
      TraceStore::FromInterned(std::move(users), std::move(domains),
                               std::move(events_));
  if (demographics != nullptr) return store.WithDemographics(*demographics);
  return store;
}

}  // namespace unicity
