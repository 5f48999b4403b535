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

#include "unicity/report.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "unicity/csv.h"

namespace unicity {

DatasetDigest DatasetDigest::Of(const TraceStore& store) {
  return {store.user_count(), store.event_count(), store.distinct_domain_count()};
}

Json AnalysisReport::ToJson() const {
  Json j;
  j["tool_version"] = tool_version;
  j["command"] = command;
  j["invocation"] = invocation;
  j["config"] = config;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  j["dataset"] = {{"users", digest.users},
                  {"events", digest.events},
                  {"domains", digest.domains}};
  j["results"] = results;
  j["warnings"] = warnings;
  return j;
}

AnalysisReport AnalysisReport::FromJson(const Json& j) {
  try {
    AnalysisReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.invocation = j.at("invocation").get<std::vector<std::string>>();
    r.config = j.at("config");
    if (!j.at("seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
    const auto& d = j.at("dataset");
    r.digest = {d.at("users").get<std::uint64_t>(), d.at("events").get<std::uint64_t>(),
                d.at("domains").get<std::uint64_t>()};
    r.results = j.at("results");
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
}

std::string AnalysisReport::Serialize() const { return ToJson().dump(2) + "\n"; }

Json ToJson(const UniquenessResult& r) {
  Json j;
  j["n"] = r.n;
  j["direction"] = DirectionName(r.direction);
  j["unique_fraction"] = r.unique_fraction;
  j["standard_error"] = r.standard_error;
  j["population_size"] = r.population_size;
  j["unique_count"] = r.unique_count;
  j["empty_fingerprints"] = r.empty_fingerprints;
  if (r.per_group) {
    Json groups = Json::object();
    for (const auto& [label, g] : *r.per_group) {
      groups[label] = {{"unique_fraction", g.unique_fraction},
                       {"standard_error", g.standard_error},
                       {"group_size", g.group_size},
                       {"unique_count", g.unique_count}};
    }
    j["per_group"] = std::move(groups);
  }
  return j;
}

Json ToJson(const IdentificationOutcome& o, const TraceStore& store) {
  return {{"user_id", store.users().name(o.user)},
          {"mean_steps", o.mean_steps},
          {"repetitions", o.repetitions},
          {"failures", o.failures},
          {"step_counts", o.step_counts}};
}

Json ToJson(const StepsDistribution& d, const TraceStore& store) {
  Json j;
  j["n"] = d.n;
  j["repetitions"] = d.repetitions;
  j["pool"] = CandidatePoolName(d.pool);
  j["population"] = d.population;
  j["unique_users"] = d.unique_users;
  j["excluded_non_unique"] = d.excluded_non_unique;
  j["failed_users"] = d.failed_users;
  j["failed_runs"] = d.failed_runs;
  j["population_mean"] = d.population_mean;
  j["population_se"] = d.population_se;
  Json hist = Json::array();
  for (const auto& b : d.histogram) {
    hist.push_back({{"lower", b.lower}, {"upper", b.upper}, {"users", b.users}});
  }
  j["histogram"] = std::move(hist);
  Json users = Json::array();
  for (const auto& o : d.outcomes) users.push_back(ToJson(o, store));
  j["users"] = std::move(users);
  return j;
}

Json ToJson(const ReidentResult& r) {
  return {{"t_hours", r.t_hours},
          {"n", r.n},
          {"strategy", MatchStrategyName(r.strategy)},
          {"success_rate", r.success_rate},
          {"standard_error", r.standard_error},
          {"eligible", r.eligible_count},
          {"successes", r.successes},
          {"matched_wrong", r.matched_wrong},
          {"unmatched", r.unmatched}};
}

Json ToJson(const SparseCell& c) {
  Json j = ToJson(c.result);
  j["k"] = c.k;
  j["empty_profiles"] = c.empty_profiles;
  j["retained_visits"] = c.retained_visits;
  return j;
}

std::string FormatFixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", value);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

void WriteTextFile(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << content;
  if (!out) throw DataError("failed writing " + path.string());
}

namespace {

std::string Row(std::initializer_list<std::string> fields) {
  std::string line;
  bool first = true;
  for (const auto& f : fields) {
    if (!first) line.push_back(',');
    first = false;
    AppendCsvField(line, f);
  }
  line.push_back('\n');
  return line;
}

std::string Int(std::uint64_t v) { return std::to_string(v); }

// t in hours without trailing zeros ("10", "2.5").
std::string Hours(double t) {
  std::ostringstream s;
  s.precision(10);
  s << t;
  return s.str();
}

}  // namespace

void WriteUnicityCurveCsv(const std::filesystem::path& path,
                          std::span<const UniquenessResult> results) {
  std::string out = std::string(kUnicityCurveHeader) + "\n";
  for (const auto& r : results) {
    out += Row({Int(static_cast<std::uint64_t>(r.n)), DirectionName(r.direction),
                FormatFixed6(r.unique_fraction), FormatFixed6(r.standard_error),
                Int(r.population_size), Int(r.unique_count)});
  }
  WriteTextFile(path, out);
}

void WriteUnicityGroupsCsv(const std::filesystem::path& path,
                           std::span<const UniquenessResult> results) {
  std::string out = std::string(kUnicityGroupsHeader) + "\n";
  for (const auto& result : results) {
    if (!result.per_group) continue;
    for (const auto& [label, g] : *result.per_group) {
      out += Row({label, Int(static_cast<std::uint64_t>(result.n)),
                  FormatFixed6(g.unique_fraction), FormatFixed6(g.standard_error),
                  Int(g.group_size), Int(g.unique_count)});
    }
  }
  WriteTextFile(path, out);
}

void WriteIdentifyHistogramCsv(const std::filesystem::path& path,
                               std::span<const StepsDistribution> dists) {
  std::string out = std::string(kIdentifyHistogramHeader) + "\n";
  for (const auto& d : dists) {
    std::size_t total = 0;
    for (const auto& b : d.histogram) total += b.users;
    for (const auto& b : d.histogram) {
      const double frac = total == 0 ? 0.0 : static_cast<double>(b.users) / total;
      out += Row({Int(static_cast<std::uint64_t>(d.n)), FormatFixed6(b.lower),
                  FormatFixed6(b.upper), Int(b.users), FormatFixed6(frac)});
    }
  }
  WriteTextFile(path, out);
}

void WriteIdentifyUsersCsv(const std::filesystem::path& path,
                           std::span<const StepsDistribution> dists,
                           const TraceStore& store) {
  std::string out = std::string(kIdentifyUsersHeader) + "\n";
  for (const auto& d : dists) {
    for (const auto& o : d.outcomes) {
      const int k = o.successes();
      const double se = k > 0 ? std::sqrt(o.step_variance() / k) : 0.0;
      out += Row({Int(static_cast<std::uint64_t>(d.n)), store.users().name(o.user),
                  FormatFixed6(o.mean_steps), FormatFixed6(se),
                  Int(static_cast<std::uint64_t>(o.repetitions)),
                  Int(static_cast<std::uint64_t>(o.failures))});
    }
  }
  WriteTextFile(path, out);
}

void WriteReidentCurveCsv(const std::filesystem::path& path,
                          std::span<const ReidentResult> results) {
  std::string out = std::string(kReidentCurveHeader) + "\n";
  for (const auto& r : results) {
    out += Row({Hours(r.t_hours), Int(static_cast<std::uint64_t>(r.n)),
                MatchStrategyName(r.strategy), FormatFixed6(r.success_rate),
                FormatFixed6(r.standard_error), Int(r.eligible_count), Int(r.successes),
                Int(r.matched_wrong), Int(r.unmatched)});
  }
  WriteTextFile(path, out);
}

void WriteSparseCurveCsv(const std::filesystem::path& path,
                         std::span<const SparseCell> cells) {
  std::string out = std::string(kSparseCurveHeader) + "\n";
  for (const auto& c : cells) {
    out += Row({Int(c.k), Int(static_cast<std::uint64_t>(c.result.n)),
                FormatFixed6(c.result.unique_fraction),
                FormatFixed6(c.result.standard_error), Int(c.result.population_size),
                Int(c.result.unique_count), Int(c.empty_profiles)});
  }
  WriteTextFile(path, out);
}

}  // namespace unicity
