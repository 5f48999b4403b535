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

// Machine-readable outputs: the JSON analysis report and per-analysis curve
// CSVs.

#ifndef UNICITY_REPORT_H_
#define UNICITY_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "unicity/identify.h"
#include "unicity/reident.h"
#include "unicity/sparse.h"
#include "unicity/trace_model.h"
#include "unicity/uniqueness.h"

namespace unicity {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

struct DatasetDigest {
  std::uint64_t users = 0;
  std::uint64_t events = 0;
  std::uint64_t domains = 0;

  static DatasetDigest Of(const TraceStore& store);
  friend bool operator==(const DatasetDigest&, const DatasetDigest&) = default;
};

struct AnalysisReport {
  std::string tool_version = kToolVersion;
  std::string command;                 // subcommand name
  std::vector<std::string> invocation;  // argv without --out / --threads
  Json config = Json::object();         // every effective setting
  std::optional<std::uint64_t> seed;
  DatasetDigest digest;
  Json results = Json::object();
  std::vector<std::string> warnings;

  Json ToJson() const;
  // Throws DataError if required keys are missing or mistyped.
  static AnalysisReport FromJson(const Json& j);
  // Two-space indented JSON with a trailing newline.
  std::string Serialize() const;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

Json ToJson(const UniquenessResult& r);
Json ToJson(const IdentificationOutcome& o, const TraceStore& store);
Json ToJson(const StepsDistribution& d, const TraceStore& store);
Json ToJson(const ReidentResult& r);
Json ToJson(const SparseCell& c);

// Fixed 6-digit decimal, as written to every curve CSV.
std::string FormatFixed6(double value);

// Curve CSV headers. Each file has exactly one header row.
inline constexpr const char* kUnicityCurveHeader =
    "n,direction,unique_fraction,standard_error,population_size,unique_count";
inline constexpr const char* kUnicityGroupsHeader =
    "group,n,unique_fraction,standard_error,group_size,unique_count";
inline constexpr const char* kIdentifyHistogramHeader =
    "n,bin_lower,bin_upper,users,fraction";
inline constexpr const char* kIdentifyUsersHeader =
    "n,user_id,mean_steps,step_standard_error,repetitions,failures";
inline constexpr const char* kReidentCurveHeader =
    "t_hours,n,strategy,success_rate,standard_error,eligible,successes,matched_wrong,unmatched";
inline constexpr const char* kSparseCurveHeader =
    "k,n,unique_fraction,standard_error,population_size,unique_count,empty_profiles";

void WriteUnicityCurveCsv(const std::filesystem::path& path,
                          std::span<const UniquenessResult> results);
void WriteUnicityGroupsCsv(const std::filesystem::path& path,
                           std::span<const UniquenessResult> results);
void WriteIdentifyHistogramCsv(const std::filesystem::path& path,
                               std::span<const StepsDistribution> dists);
void WriteIdentifyUsersCsv(const std::filesystem::path& path,
                           std::span<const StepsDistribution> dists,
                           const TraceStore& store);
void WriteReidentCurveCsv(const std::filesystem::path& path,
                          std::span<const ReidentResult> results);
void WriteSparseCurveCsv(const std::filesystem::path& path,
                         std::span<const SparseCell> cells);

// Writes `content` to `path`, throwing DataError on failure.
void WriteTextFile(const std::filesystem::path& path, const std::string& content);

}  // namespace unicity

#endif  // UNICITY_REPORT_H_
