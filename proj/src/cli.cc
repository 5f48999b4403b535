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

#include "unicity/cli.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <unordered_set>

#include "unicity/identify.h"
#include "unicity/ingestion.h"
#include "unicity/parallel.h"
#include "unicity/reident.h"
#include "unicity/report.h"
#include "unicity/sparse.h"
#include "unicity/synthgen.h"
#include "unicity/uniqueness.h"

namespace unicity::cli {
namespace fs = std::filesystem;

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ConfigError("bad integer '" + s + "' in list '" + text + "'");
    }
  };
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
      continue;
    }
    const int lo = to_int(part.substr(0, dots));
    const int hi = to_int(part.substr(dots + 2));
    if (hi < lo) throw ConfigError("descending range '" + part + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty list '" + text + "'");
  return out;
}

std::vector<double> ParseDoubleList(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    try {
      std::size_t used = 0;
      const double v = std::stod(part, &used);
      if (used != part.size() || !std::isfinite(v)) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ConfigError("bad number '" + part + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty list '" + text + "'");
  return out;
}

namespace {

struct InputOptions {
  std::string trace;
  std::string snapshot;
  std::string demographics;
  std::string mapping;
  std::string timestamp_format;
  std::string utc_offset;
};

struct CommonOptions {
  std::string out;
  std::optional<int> threads;
  std::string tie_break = "active";
  bool drop_short = false;
};

void AddInputOptions(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--trace", in.trace, "Trace CSV");
  cmd->add_option("--snapshot", in.snapshot, "Binary trace snapshot (instead of --trace)");
  cmd->add_option("--demographics", in.demographics, "Demographics CSV (user_id,gender,age)");
  cmd->add_option("--mapping", in.mapping, "JSON column mapping for the trace CSV");
  cmd->add_option("--timestamp-format", in.timestamp_format,
                  "iso8601 | unix | unix_ms | strptime pattern");
  cmd->add_option("--utc-offset", in.utc_offset,
                  "Offset for timestamps without one, e.g. +02:00");
}

void AddCommonOptions(CLI::App* cmd, CommonOptions& c, bool fingerprint_flags = true) {
  cmd->add_option("--out", c.out, "JSON report path; curve CSVs go next to it");
  cmd->add_option("--threads", c.threads, "Worker threads (default: UNICITY_THREADS or all cores)");
  if (fingerprint_flags) {
    cmd->add_option("--tie-break", c.tie_break, "active | lexicographic");
    cmd->add_flag("--drop-short", c.drop_short,
                  "Drop users with fewer than n distinct domains");
  }
}

struct Loaded {
  TraceStore store;
  ParseReport trace_report;
  ParseReport demographics_report;
  bool from_snapshot = false;
};

Loaded LoadInput(const InputOptions& in) {
  if (in.trace.empty() == in.snapshot.empty()) {
    throw ConfigError("give exactly one of --trace or --snapshot");
  }
  Loaded loaded;
  std::optional<DemographicsTable> demo;
  if (!in.demographics.empty()) {
    demo = ParseDemographics(fs::path(in.demographics), &loaded.demographics_report);
  }
  if (!in.snapshot.empty()) {
    loaded.from_snapshot = true;
    loaded.store = ReadSnapshot(fs::path(in.snapshot));
    if (demo) loaded.store = loaded.store.WithDemographics(*demo);
    return loaded;
  }
  ColumnMapping mapping;
  if (!in.mapping.empty()) mapping = ColumnMapping::FromJsonFile(in.mapping);
  if (!in.timestamp_format.empty()) mapping.timestamp_format = in.timestamp_format;
  if (!in.utc_offset.empty()) mapping.utc_offset = in.utc_offset;
  mapping.Validate();
  loaded.store = LoadTrace(fs::path(in.trace), mapping, &loaded.trace_report,
                           demo ? &*demo : nullptr);
  return loaded;
}

Json InputConfig(const InputOptions& in) {
  Json j;
  j["trace"] = in.trace;
  j["snapshot"] = in.snapshot;
  j["demographics"] = in.demographics;
  j["mapping"] = in.mapping;
  j["timestamp_format"] = in.timestamp_format.empty() ? "iso8601" : in.timestamp_format;
  j["utc_offset"] = in.utc_offset.empty() ? "+00:00" : in.utc_offset;
  return j;
}

void AddLoadWarnings(const Loaded& loaded, std::vector<std::string>& warnings) {
  if (loaded.trace_report.skipped > 0) {
    warnings.push_back("trace: skipped " + std::to_string(loaded.trace_report.skipped) +
                       " of " + std::to_string(loaded.trace_report.rows) + " rows");
    for (const auto& d : loaded.trace_report.diagnostics) warnings.push_back("trace: " + d);
  }
  if (loaded.demographics_report.skipped > 0) {
    warnings.push_back("demographics: skipped " +
                       std::to_string(loaded.demographics_report.skipped) + " rows");
    for (const auto& d : loaded.demographics_report.diagnostics) {
      warnings.push_back("demographics: " + d);
    }
  }
}

FingerprintOptions FingerprintConfig(const CommonOptions& c) {
  return {ParseTieBreak(c.tie_break), c.drop_short};
}

void AddFingerprintConfig(Json& j, const CommonOptions& c) {
  j["tie_break"] = c.tie_break;
  j["drop_short"] = c.drop_short;
}

// argv minus the program name, --out and --threads (with their values).
std::vector<std::string> Invocation(std::span<const std::string> args) {
  std::vector<std::string> out{"unicity"};
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--out" || a == "--threads") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0 || a.rfind("--threads=", 0) == 0) continue;
    out.push_back(a);
  }
  return out;
}

fs::path OutputDir(const std::string& out) {
  const fs::path parent = fs::path(out).parent_path();
  if (parent.empty()) return ".";
  std::error_code ec;
  fs::create_directories(parent, ec);
  if (ec) throw DataError("cannot create " + parent.string() + ": " + ec.message());
  return parent;
}

void Finish(const AnalysisReport& report, const std::string& out_path, std::ostream& out) {
  for (const auto& w : report.warnings) out << "warning: " << w << "\n";
  if (!out_path.empty()) {
    OutputDir(out_path);
    WriteTextFile(out_path, report.Serialize());
    out << "report: " << out_path << "\n";
  }
}

std::string Pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", 100.0 * v);
  return buf;
}

int RunValidate(std::span<const std::string> args, const InputOptions& in,
                const CommonOptions& c, const std::string& write_snapshot,
                std::ostream& out) {
  Loaded loaded = LoadInput(in);
  AnalysisReport report;
  report.command = "validate";
  report.invocation = Invocation(args);
  report.config["input"] = InputConfig(in);
  report.config["write_snapshot"] = write_snapshot;
  report.digest = DatasetDigest::Of(loaded.store);
  AddLoadWarnings(loaded, report.warnings);
  const bool consistent = loaded.store.ProfilesConsistent();
  std::size_t with_demo = 0;
  for (const auto& d : loaded.store.demographics_by_user()) with_demo += d.has_value();
  report.results["rows"] = loaded.trace_report.rows;
  report.results["skipped_rows"] = loaded.trace_report.skipped;
  report.results["users_with_demographics"] = with_demo;
  report.results["profiles_consistent"] = consistent;
  if (!write_snapshot.empty()) WriteSnapshot(fs::path(write_snapshot), loaded.store);

  out << "users:   " << report.digest.users << "\n"
      << "events:  " << report.digest.events << "\n"
      << "domains: " << report.digest.domains << "\n";
  if (!loaded.from_snapshot) {
    out << "rows:    " << loaded.trace_report.rows << " (" << loaded.trace_report.skipped
        << " skipped)\n";
  }
  if (!write_snapshot.empty()) out << "snapshot: " << write_snapshot << "\n";
  Finish(report, c.out, out);
  if (!consistent) throw DataError("profiles do not match events");
  return kExitOk;
}

int RunUnicity(std::span<const std::string> args, const InputOptions& in,
               const CommonOptions& c, const std::string& n_text,
               const std::string& direction_text, const std::string& group_by,
               const std::string& group_scope, std::ostream& out) {
  const auto n_range = ParseIntList(n_text);
  for (int n : n_range) {
    if (n < 1) throw ConfigError("fingerprint lengths must be >= 1");
  }
  const Direction direction = ParseDirection(direction_text);
  const FingerprintOptions fpo = FingerprintConfig(c);
  std::optional<Grouping> grouping;
  if (!group_by.empty()) grouping = ParseGrouping(group_by);
  GroupScope scope;
  if (group_scope == "global") {
    scope = GroupScope::kGlobal;
  } else if (group_scope == "within") {
    scope = GroupScope::kWithinGroup;
  } else {
    throw ConfigError("unknown group scope '" + group_scope + "' (expected global|within)");
  }
  const unsigned threads = ResolveThreads(c.threads);

  Loaded loaded = LoadInput(in);
  const TraceStore& store = loaded.store;
  AnalysisReport report;
  report.command = "unicity";
  report.invocation = Invocation(args);
  report.config["input"] = InputConfig(in);
  report.config["n"] = n_range;
  report.config["direction"] = DirectionName(direction);
  report.config["group_by"] = group_by;
  report.config["group_scope"] = group_scope;
  AddFingerprintConfig(report.config, c);
  report.digest = DatasetDigest::Of(store);
  AddLoadWarnings(loaded, report.warnings);

  const auto curve = UniquenessCurve(store, n_range, direction, fpo, threads);
  Json curve_json = Json::array();
  for (const auto& r : curve) {
    curve_json.push_back(ToJson(r));
    out << "n=" << r.n << " unique " << Pct(r.unique_fraction) << " (se "
        << Pct(r.standard_error) << ") of " << r.population_size << "\n";
  }
  report.results["curve"] = std::move(curve_json);

  std::vector<UniquenessResult> grouped;
  if (grouping) {
    if (!store.has_demographics()) {
      report.warnings.push_back("no demographics loaded; every user is ungrouped");
    }
    Json groups_json = Json::array();
    for (int n : n_range) {
      grouped.push_back(GroupUniqueness(store, n, *grouping, scope, fpo, direction));
      groups_json.push_back(ToJson(grouped.back()));
      for (const auto& [label, g] : *grouped.back().per_group) {
        out << "  n=" << n << " " << label << ": " << Pct(g.unique_fraction) << " of "
            << g.group_size << "\n";
      }
    }
    report.results["groups"] = std::move(groups_json);
    const auto& last = grouped.back().per_group;
    auto it = last->find(kUngroupedLabel);
    if (it != last->end()) {
      report.warnings.push_back(std::to_string(it->second.group_size) +
                                " users without a " + GroupingName(*grouping) + " group");
    }
  }
  for (const auto& r : curve) {
    if (r.empty_fingerprints > 0) {
      report.warnings.push_back(std::to_string(r.empty_fingerprints) +
                                " users with empty fingerprints at n=" + std::to_string(r.n));
      break;
    }
  }

  if (!c.out.empty()) {
    WriteUnicityCurveCsv(OutputDir(c.out) / "unicity_curve.csv", curve);
    if (grouping) WriteUnicityGroupsCsv(OutputDir(c.out) / "unicity_groups.csv", grouped);
  }
  Finish(report, c.out, out);
  return kExitOk;
}

int RunIdentify(std::span<const std::string> args, const InputOptions& in,
                const CommonOptions& c, const std::string& n_text, int reps,
                std::uint64_t seed, const std::string& pool_text, double bin_width,
                std::ostream& out) {
  const auto n_list = ParseIntList(n_text);
  IdentifyOptions opts;
  opts.pool = ParseCandidatePool(pool_text);
  opts.fingerprint = FingerprintConfig(c);
  opts.bin_width = bin_width;
  opts.threads = ResolveThreads(c.threads);
  if (reps < 1) throw ConfigError("--reps must be >= 1");
  if (!(bin_width > 0.0)) throw ConfigError("--bin-width must be > 0");
  for (int n : n_list) {
    if (n < 1 || n > kMaxIdentifyLength) throw ConfigError("--n values must be in [1, 64]");
  }

  Loaded loaded = LoadInput(in);
  const TraceStore& store = loaded.store;
  AnalysisReport report;
  report.command = "identify";
  report.invocation = Invocation(args);
  report.seed = seed;
  report.config["input"] = InputConfig(in);
  report.config["n"] = n_list;
  report.config["repetitions"] = reps;
  report.config["seed"] = seed;
  report.config["pool"] = pool_text;
  report.config["bin_width"] = bin_width;
  AddFingerprintConfig(report.config, c);
  report.digest = DatasetDigest::Of(store);
  AddLoadWarnings(loaded, report.warnings);

  std::vector<StepsDistribution> dists;
  Json dist_json = Json::array();
  for (int n : n_list) {
    dists.push_back(ComputeStepsDistribution(store, n, reps, seed, opts));
    const auto& d = dists.back();
    dist_json.push_back(ToJson(d, store));
    out << "n=" << n << " mean steps " << FormatFixed6(d.population_mean) << " (se "
        << FormatFixed6(d.population_se) << ") over " << d.unique_users
        << " unique users; " << d.excluded_non_unique << " non-unique excluded\n";
    if (d.excluded_non_unique > 0) {
      report.warnings.push_back("n=" + std::to_string(n) + ": " +
                                std::to_string(d.excluded_non_unique) +
                                " non-unique users excluded");
    }
    if (d.failed_runs > 0) {
      report.warnings.push_back("n=" + std::to_string(n) + ": " +
                                std::to_string(d.failed_runs) + " runs over " +
                                std::to_string(d.failed_users) +
                                " users exhausted the fingerprint");
    }
  }
  report.results["distributions"] = std::move(dist_json);
  if (!c.out.empty()) {
    WriteIdentifyHistogramCsv(OutputDir(c.out) / "identify_histogram.csv", dists);
    WriteIdentifyUsersCsv(OutputDir(c.out) / "identify_users.csv", dists, store);
  }
  Finish(report, c.out, out);
  return kExitOk;
}

int RunReident(std::span<const std::string> args, const InputOptions& in,
               const CommonOptions& c, const std::string& hours_text,
               const std::string& n_text, const std::string& strategy_text,
               const std::string& clock_text, std::uint64_t seed, bool duplicate,
               std::ostream& out) {
  const auto n_list = ParseIntList(n_text);
  for (int n : n_list) {
    if (n < 1) throw ConfigError("fingerprint lengths must be >= 1");
  }
  ReidentOptions opts;
  opts.strategy = ParseMatchStrategy(strategy_text);
  opts.clock = ParseClockMode(clock_text);
  opts.fingerprint = FingerprintConfig(c);
  opts.threads = ResolveThreads(c.threads);
  std::vector<double> hours;
  if (!duplicate) {
    hours = ParseDoubleList(hours_text);
    for (double t : hours) {
      if (!(t > 0.0)) throw ConfigError("--hours values must be > 0");
    }
  }

  Loaded loaded = LoadInput(in);
  const TraceStore& store = loaded.store;
  AnalysisReport report;
  report.command = "reident";
  report.invocation = Invocation(args);
  report.seed = seed;
  report.config["input"] = InputConfig(in);
  report.config["hours"] = hours;
  report.config["n"] = n_list;
  report.config["strategy"] = strategy_text;
  report.config["clock"] = clock_text;
  report.config["seed"] = seed;
  report.config["duplicate_slices"] = duplicate;
  AddFingerprintConfig(report.config, c);
  report.digest = DatasetDigest::Of(store);
  AddLoadWarnings(loaded, report.warnings);

  std::vector<ReidentResult> results;
  Json slices = Json::array();
  auto score = [&](const SlicePair& pair) {
    slices.push_back({{"t_hours", pair.t_hours},
                      {"eligible_users", pair.eligible_users.size()},
                      {"ineligible_users", pair.ineligible_users}});
    if (pair.ineligible_users > 0) {
      std::ostringstream t;
      t << pair.t_hours;
      report.warnings.push_back("t=" + t.str() + "h: " +
                                std::to_string(pair.ineligible_users) +
                                " users with too little browsing time excluded");
    }
    for (int n : n_list) {
      results.push_back(ReidentificationRate(pair, n, opts.strategy, opts.fingerprint,
                                             opts.threads));
      const auto& r = results.back();
      out << "t=" << r.t_hours << "h n=" << n << " " << MatchStrategyName(r.strategy)
          << ": " << Pct(r.success_rate) << " of " << r.eligible_count << " eligible\n";
    }
  };
  if (duplicate) {
    score(DuplicatedSlices(store));
  } else {
    for (double t : hours) score(SplitByActiveTime(store, t, opts.clock));
  }
  Json cells = Json::array();
  for (const auto& r : results) cells.push_back(ToJson(r));
  report.results["slices"] = std::move(slices);
  report.results["cells"] = std::move(cells);
  if (!c.out.empty()) WriteReidentCurveCsv(OutputDir(c.out) / "reident_curve.csv", results);
  Finish(report, c.out, out);
  return kExitOk;
}

int RunSparse(std::span<const std::string> args, const InputOptions& in,
              const CommonOptions& c, const std::string& k_text,
              const std::string& n_text, const std::string& rank_by_text,
              std::ostream& out) {
  std::vector<std::size_t> k_list;
  for (int k : ParseIntList(k_text)) {
    if (k < 1) throw ConfigError("--k values must be >= 1");
    k_list.push_back(static_cast<std::size_t>(k));
  }
  const auto n_list = ParseIntList(n_text);
  for (int n : n_list) {
    if (n < 1) throw ConfigError("fingerprint lengths must be >= 1");
  }
  SparseOptions opts;
  opts.rank_by = ParseRankBy(rank_by_text);
  opts.fingerprint = FingerprintConfig(c);
  opts.threads = ResolveThreads(c.threads);

  Loaded loaded = LoadInput(in);
  const TraceStore& store = loaded.store;
  AnalysisReport report;
  report.command = "sparse";
  report.invocation = Invocation(args);
  report.config["input"] = InputConfig(in);
  report.config["k"] = k_list;
  report.config["n"] = n_list;
  report.config["rank_by"] = rank_by_text;
  AddFingerprintConfig(report.config, c);
  report.digest = DatasetDigest::Of(store);
  AddLoadWarnings(loaded, report.warnings);

  const auto cells = SparseUniqueness(store, k_list, n_list, opts);
  Json cells_json = Json::array();
  std::size_t last_k = 0;
  for (const auto& cell : cells) {
    cells_json.push_back(ToJson(cell));
    out << "k=" << cell.k << " n=" << cell.result.n << " unique "
        << Pct(cell.result.unique_fraction) << " (" << cell.empty_profiles
        << " empty profiles)\n";
    if (cell.empty_profiles > 0 && cell.k != last_k) {
      report.warnings.push_back("k=" + std::to_string(cell.k) + ": " +
                                std::to_string(cell.empty_profiles) +
                                " users without visits to the top-k domains");
    }
    last_k = cell.k;
  }
  report.results["domain_count"] = store.distinct_domain_count();
  report.results["cells"] = std::move(cells_json);
  if (!c.out.empty()) WriteSparseCurveCsv(OutputDir(c.out) / "sparse_curve.csv", cells);
  Finish(report, c.out, out);
  return kExitOk;
}

int RunSynth(std::span<const std::string> args, const SynthParams& params,
             const CommonOptions& c, const std::string& trace_out,
             const std::string& demographics_out, std::ostream& out) {
  params.Validate();
  if (trace_out.empty()) throw ConfigError("--trace-out is required");
  const unsigned threads = ResolveThreads(c.threads);
  std::ofstream trace(trace_out, std::ios::binary | std::ios::trunc);
  if (!trace) throw DataError("cannot write " + trace_out);
  trace << "user_id,timestamp,domain,active_seconds\n";

  std::uint64_t events = 0;
  std::unordered_set<std::string> domains;
  std::string line;
  std::vector<Demographics> demo;
  GenerateEvents(
      params,
      [&](const std::string& user, std::int64_t ts, const std::string& domain,
          std::uint32_t active) {
        line.clear();
        line += user;
        line.push_back(',');
        line += FormatIso8601(ts);
        line.push_back(',');
        line += domain;
        line.push_back(',');
        line += std::to_string(active);
        line.push_back('\n');
        trace << line;
        ++events;
        if (domains.size() < params.domains) domains.insert(domain);
      },
      &demo, threads);
  trace.close();
  if (!trace) throw DataError("failed writing " + trace_out);
  if (!demographics_out.empty()) {
    std::ofstream d(demographics_out, std::ios::binary | std::ios::trunc);
    if (!d) throw DataError("cannot write " + demographics_out);
    WriteDemographicsCsv(d, demo);
  }

  AnalysisReport report;
  report.command = "synth";
  report.invocation = Invocation(args);
  report.seed = params.seed;
  report.config = {{"users", params.users},
                   {"domains", params.domains},
                   {"zipf_exponent", params.zipf_exponent},
                   {"habit_size_mean", params.habit_size_mean},
                   {"habit_weight", params.habit_weight},
                   {"events_per_user_mean", params.events_per_user_mean},
                   {"events_log_sigma", params.events_log_sigma},
                   {"session_gap_seconds", params.session_gap_seconds},
                   {"dwell_mean_seconds", params.dwell_mean_seconds},
                   {"seed", params.seed},
                   {"disjoint_habits", params.disjoint_habits},
                   {"trace_out", trace_out},
                   {"demographics_out", demographics_out}};
  report.digest = {params.users, events, domains.size()};
  report.results["trace"] = trace_out;
  report.results["demographics"] = demographics_out;
  out << "wrote " << events << " events for " << params.users << " users over "
      << domains.size() << " domains to " << trace_out << "\n";
  Finish(report, c.out, out);
  return kExitOk;
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniqueness and re-identification of web-browsing fingerprints", "unicity"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  InputOptions in;
  CommonOptions common;

  auto* validate = app.add_subcommand("validate", "Ingest a trace and print its digest");
  AddInputOptions(validate, in);
  AddCommonOptions(validate, common, false);
  std::string write_snapshot;
  validate->add_option("--write-snapshot", write_snapshot, "Write a binary snapshot here");

  auto* unicity = app.add_subcommand("unicity", "Fingerprint uniqueness curve");
  AddInputOptions(unicity, in);
  AddCommonOptions(unicity, common);
  std::string n_range = "1..10";
  std::string direction = "most";
  std::string group_by;
  std::string group_scope = "global";
  unicity->add_option("--n", n_range, "Fingerprint lengths, e.g. 1..10 or 4,5")
      ->capture_default_str();
  unicity->add_option("--direction", direction, "most | least")->capture_default_str();
  unicity->add_option("--group-by", group_by, "gender | age");
  unicity->add_option("--group-scope", group_scope, "global | within")->capture_default_str();

  auto* identify = app.add_subcommand("identify", "Steps needed to isolate each unique user");
  AddInputOptions(identify, in);
  AddCommonOptions(identify, common);
  std::string id_n = "4,5";
  int reps = kDefaultRepetitions;
  std::uint64_t id_seed = 42;
  std::string pool = "all";
  double bin_width = 0.25;
  identify->add_option("--n", id_n, "Fingerprint lengths")->capture_default_str();
  identify->add_option("--reps", reps, "Random orders per user")->capture_default_str();
  identify->add_option("--seed", id_seed, "Run seed")->capture_default_str();
  identify->add_option("--pool", pool, "all | unique")->capture_default_str();
  identify->add_option("--bin-width", bin_width, "Histogram bin width")->capture_default_str();

  auto* reident = app.add_subcommand("reident", "Re-identification across time slices");
  AddInputOptions(reident, in);
  AddCommonOptions(reident, common);
  std::string hours = "2,4,6,8,10";
  std::string re_n = "4,5,10,15";
  std::string strategy = "overlap";
  std::string clock = "active";
  std::uint64_t re_seed = 42;
  bool duplicate = false;
  reident->add_option("--hours", hours, "Slice lengths in hours")->capture_default_str();
  reident->add_option("--n", re_n, "Fingerprint lengths")->capture_default_str();
  reident->add_option("--strategy", strategy, "overlap | exact")->capture_default_str();
  reident->add_option("--clock", clock, "active | wall")->capture_default_str();
  reident->add_option("--seed", re_seed, "Echoed in the report")->capture_default_str();
  reident->add_flag("--duplicate-slices", duplicate,
                    "Use the whole trace as both slices (identity check)");

  auto* sparse = app.add_subcommand("sparse", "Uniqueness under top-k domain tracking");
  AddInputOptions(sparse, in);
  AddCommonOptions(sparse, common);
  std::string k_text = "10,25,50,100,200,500,1000";
  std::string sp_n = "4,5";
  std::string rank_by = "visits";
  sparse->add_option("--k", k_text, "Tracked domain counts")->capture_default_str();
  sparse->add_option("--n", sp_n, "Fingerprint lengths")->capture_default_str();
  sparse->add_option("--rank-by", rank_by, "visits | visitors")->capture_default_str();

  auto* synth = app.add_subcommand("synth", "Generate a synthetic trace");
  AddCommonOptions(synth, common, false);
  SynthParams params;
  std::string trace_out;
  std::string demographics_out;
  synth->add_option("--users", params.users)->capture_default_str();
  synth->add_option("--domains", params.domains)->capture_default_str();
  synth->add_option("--zipf", params.zipf_exponent)->capture_default_str();
  synth->add_option("--habit-size", params.habit_size_mean)->capture_default_str();
  synth->add_option("--habit-weight", params.habit_weight)->capture_default_str();
  synth->add_option("--events-mean", params.events_per_user_mean)->capture_default_str();
  synth->add_option("--events-sigma", params.events_log_sigma)->capture_default_str();
  synth->add_option("--gap", params.session_gap_seconds, "Mean idle seconds between visits")
      ->capture_default_str();
  synth->add_option("--dwell", params.dwell_mean_seconds, "Mean active seconds per visit")
      ->capture_default_str();
  synth->add_option("--seed", params.seed)->capture_default_str();
  synth->add_flag("--disjoint-habits", params.disjoint_habits);
  synth->add_option("--trace-out", trace_out, "Trace CSV to write")->required();
  synth->add_option("--demographics-out", demographics_out, "Demographics CSV to write");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfigError;
  }

  try {
    if (validate->parsed()) return RunValidate(args, in, common, write_snapshot, out);
    if (unicity->parsed()) {
      return RunUnicity(args, in, common, n_range, direction, group_by, group_scope, out);
    }
    if (identify->parsed()) {
      return RunIdentify(args, in, common, id_n, reps, id_seed, pool, bin_width, out);
    }
    if (reident->parsed()) {
      return RunReident(args, in, common, hours, re_n, strategy, clock, re_seed, duplicate,
                        out);
    }
    if (sparse->parsed()) return RunSparse(args, in, common, k_text, sp_n, rank_by, out);
    if (synth->parsed()) {
      return RunSynth(args, params, common, trace_out, demographics_out, out);
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitConfigError;
}

}  // namespace unicity::cli
