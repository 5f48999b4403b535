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

// Reading trace and demographics files into a TraceStore, writing them back
// out, and the binary snapshot cache.

#ifndef UNICITY_INGESTION_H_
#define UNICITY_INGESTION_H_

#include <cstddef>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unicity/timestamp.h"
#include "unicity/trace_model.h"

namespace unicity {

// Header names of the four trace columns. Extra columns are ignored.
struct ColumnMapping {
  std::string user_column = "user_id";
  std::string timestamp_column = "timestamp";
  std::string domain_column = "domain";
  std::string duration_column = "active_seconds";
  std::string timestamp_format = "iso8601";
  std::string utc_offset = "+00:00";

  // Throws ConfigError unless the four names are non-empty and distinct and
  // the timestamp settings parse.
  void Validate() const;

  // JSON object with any subset of the fields above.
  static ColumnMapping FromJsonFile(const std::filesystem::path& path);
};

// Lowercase, trim surrounding whitespace, drop one leading "www.".
// Returns an empty string if nothing is left.
std::string NormalizeDomain(std::string_view raw);

struct ParseReport {
  std::size_t rows = 0;     // data rows seen
  std::size_t skipped = 0;  // rows rejected
  std::vector<std::string> diagnostics;  // first few rejections, "line N: why"

  static constexpr std::size_t kMaxDiagnostics = 20;
  void Reject(std::size_t line, std::string why);
};

// Fraction of skipped trace rows above which parsing fails.
inline constexpr double kMaxSkippedFraction = 0.10;

// Streams valid rows of a trace CSV. Throws ConfigError when a mapped column
// is missing from the header and DataError when more than 10% of rows are
// rejected.
using TraceRowSink = std::function<void(std::string_view user,
                                        std::int64_t timestamp,
                                        std::string_view domain,
                                        std::uint32_t active_seconds)>;
ParseReport ReadTraceCsv(std::istream& in, const ColumnMapping& mapping,
                         const TraceRowSink& sink);

// Parsed events, sorted per user by timestamp (stable).
std::vector<BrowsingEvent> ParseTrace(const std::filesystem::path& path,
                                      const ColumnMapping& mapping,
                                      ParseReport* report = nullptr);

TraceStore LoadTrace(const std::filesystem::path& path,
                     const ColumnMapping& mapping, ParseReport* report = nullptr,
                     const DemographicsTable* demographics = nullptr);
TraceStore LoadTrace(std::istream& in, const ColumnMapping& mapping,
                     ParseReport* report = nullptr,
                     const DemographicsTable* demographics = nullptr);

// Gender strings: {m, male, man} -> male, {f, female, woman} -> female,
// case-insensitive; anything else -> other/unknown.
Gender ParseGender(std::string_view text);

// Header must contain user_id, gender, age. Duplicate user ids throw
// DataError; unparseable or out-of-range ages skip the row.
DemographicsTable ParseDemographics(std::istream& in,
                                    ParseReport* report = nullptr);
DemographicsTable ParseDemographics(const std::filesystem::path& path,
                                    ParseReport* report = nullptr);

// Default-mapping CSV with ISO-8601 UTC timestamps.
void WriteTraceCsv(std::ostream& out, std::span<const BrowsingEvent> events);
void WriteTraceCsv(std::ostream& out, const TraceStore& store);
void WriteDemographicsCsv(std::ostream& out,
                          std::span<const Demographics> demographics);

// Binary snapshot, little-endian:
//   "UNQT" | version u8 | flags u8 (bit 0: demographics) | 2 reserved bytes
//   u32 users, then per user u32 length + bytes
//   u32 domains, then per domain u32 length + bytes
//   u64 events, then per event u32 user, u32 domain, i64 ts, u32 active
//   if demographics: u32 count, per entry u32 user, u8 gender, u8 age
inline constexpr char kSnapshotMagic[4] = {'U', 'N', 'Q', 'T'};
inline constexpr std::uint8_t kSnapshotVersion = 1;

void WriteSnapshot(std::ostream& out, const TraceStore& store);
void WriteSnapshot(const std::filesystem::path& path, const TraceStore& store);
// Throws DataError on bad magic, unknown version or truncation.
TraceStore ReadSnapshot(std::istream& in);
TraceStore ReadSnapshot(const std::filesystem::path& path);

}  // namespace unicity

#endif  // UNICITY_INGESTION_H_
