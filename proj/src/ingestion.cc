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

#include "unicity/ingestion.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>

#include <json.hpp>

#include "unicity/csv.h"

namespace unicity {
namespace {

std::string_view TrimView(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

// Non-negative integer or decimal seconds; decimals round half up.
std::optional<std::uint32_t> ParseDuration(std::string_view text) {
  text = TrimView(text);
  if (text.empty()) return std::nullopt;
  std::uint64_t whole = 0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, whole);
  if (ec != std::errc() || ptr == begin) return std::nullopt;
  if (ptr != end) {
    if (*ptr != '.') return std::nullopt;
    ++ptr;
    if (ptr == end) return std::nullopt;
    const char first = *ptr;
    for (const char* p = ptr; p != end; ++p) {
      if (*p < '0' || *p > '9') return std::nullopt;
    }
    if (first >= '5') ++whole;
  }
  if (whole > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return static_cast<std::uint32_t>(whole);
}

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

std::size_t ColumnIndex(std::span<const std::string> header,
                        const std::string& name, std::string_view what) {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (TrimView(header[i]) == name) return i;
  }
  throw ConfigError("missing " + std::string(what) + " column '" + name +
                    "' in header");
}

}  // namespace

void ColumnMapping::Validate() const {
  const std::string* names[] = {&user_column, &timestamp_column,
                                &domain_column, &duration_column};
  std::set<std::string> seen;
  for (const std::string* n : names) {
    if (n->empty()) throw ConfigError("column mapping has an empty column name");
    if (!seen.insert(*n).second) {
      throw ConfigError("column mapping names '" + *n + "' twice");
    }
  }
  TimestampFormat::Parse(timestamp_format, utc_offset);
}

ColumnMapping ColumnMapping::FromJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open mapping file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("mapping file " + path.string() + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("mapping file must hold a JSON object");
  ColumnMapping m;
  const std::pair<const char*, std::string*> fields[] = {
      {"user_column", &m.user_column},
      {"timestamp_column", &m.timestamp_column},
      {"domain_column", &m.domain_column},
      {"duration_column", &m.duration_column},
      {"timestamp_format", &m.timestamp_format},
      {"utc_offset", &m.utc_offset},
  };
  for (const auto& [key, value] : j.items()) {
    auto it = std::find_if(std::begin(fields), std::end(fields),
                           [&](const auto& f) { return key == f.first; });
    if (it == std::end(fields)) throw ConfigError("unknown mapping key '" + key + "'");
    if (!value.is_string()) throw ConfigError("mapping key '" + key + "' must be a string");
    *it->second = value.get<std::string>();
  }
  m.Validate();
  return m;
}

std::string NormalizeDomain(std::string_view raw) {
  std::string d = Lower(TrimView(raw));
  if (d.rfind("www.", 0) == 0) d.erase(0, 4);
  return d;
}

void ParseReport::Reject(std::size_t line, std::string why) {
  ++skipped;
  if (diagnostics.size() < kMaxDiagnostics) {
    diagnostics.push_back("line " + std::to_string(line) + ": " + std::move(why));
  }
}

ParseReport ReadTraceCsv(std::istream& in, const ColumnMapping& mapping,
                         const TraceRowSink& sink) {
  mapping.Validate();
  const TimestampFormat format =
      TimestampFormat::Parse(mapping.timestamp_format, mapping.utc_offset);
  CsvReader reader(in);
  if (!reader.Next()) throw ConfigError("trace file is empty (no header row)");
  std::vector<std::string> header(reader.fields().begin(), reader.fields().end());
  if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    header[0].erase(0, 3);
  }
  const std::size_t user_col = ColumnIndex(header, mapping.user_column, "user");
  const std::size_t ts_col = ColumnIndex(header, mapping.timestamp_column, "timestamp");
  const std::size_t domain_col = ColumnIndex(header, mapping.domain_column, "domain");
  const std::size_t dur_col = ColumnIndex(header, mapping.duration_column, "duration");
  const std::size_t needed = std::max({user_col, ts_col, domain_col, dur_col}) + 1;

  ParseReport report;
  std::string domain;
  while (reader.Next()) {
    const auto fields = reader.fields();
    if (fields.size() == 1 && fields[0].empty() && !reader.malformed()) continue;
    ++report.rows;
    const std::size_t line = reader.line_number();
    if (reader.malformed()) {
      report.Reject(line, "unterminated quoted field");
      continue;
    }
    if (fields.size() < needed) {
      report.Reject(line, "expected at least " + std::to_string(needed) +
                              " fields, got " + std::to_string(fields.size()));
      continue;
    }
    const std::string_view user = TrimView(fields[user_col]);
    if (user.empty()) {
      report.Reject(line, "empty user id");
      continue;
    }
    const auto ts = ParseTimestamp(fields[ts_col], format);
    if (!ts) {
      report.Reject(line, "unparseable timestamp '" + fields[ts_col] + "'");
      continue;
    }
    const auto duration = ParseDuration(fields[dur_col]);
    if (!duration) {
      report.Reject(line, "unparseable duration '" + fields[dur_col] + "'");
      continue;
    }
    domain = NormalizeDomain(fields[domain_col]);
    if (domain.empty()) {
      report.Reject(line, "empty domain");
      continue;
    }
    sink(user, *ts, domain, *duration);
  }
  if (report.rows > 0 &&
      static_cast<double>(report.skipped) >
          kMaxSkippedFraction * static_cast<double>(report.rows)) {
    std::string msg = "rejected " + std::to_string(report.skipped) + " of " +
                      std::to_string(report.rows) + " rows (limit 10%)";
    if (!report.diagnostics.empty()) msg += "; first: " + report.diagnostics.front();
    throw DataError(msg);
  }
  return report;
}

std::vector<BrowsingEvent> ParseTrace(const std::filesystem::path& path,
                                      const ColumnMapping& mapping,
                                      ParseReport* report) {
  return LoadTrace(path, mapping, report).ToBrowsingEvents();
}

TraceStore LoadTrace(std::istream& in, const ColumnMapping& mapping,
                     ParseReport* report,
                     const DemographicsTable* demographics) {
  TraceBuilder builder;
  ParseReport r = ReadTraceCsv(
      in, mapping,
      [&](std::string_view user, std::int64_t ts, std::string_view domain,
          std::uint32_t active) { builder.Add(user, ts, domain, active); });
  if (report != nullptr) *report = std::move(r);
  return std::move(builder).Build(demographics);
}

TraceStore LoadTrace(const std::filesystem::path& path,
                     const ColumnMapping& mapping, ParseReport* report,
                     const DemographicsTable* demographics) {
  std::ifstream in = OpenInput(path);
  return LoadTrace(in, mapping, report, demographics);
}

Gender ParseGender(std::string_view text) {
  const std::string g = Lower(TrimView(text));
  if (g == "m" || g == "male" || g == "man") return Gender::kMale;
  if (g == "f" || g == "female" || g == "woman") return Gender::kFemale;
  return Gender::kOtherUnknown;
}

DemographicsTable ParseDemographics(std::istream& in, ParseReport* report) {
  CsvReader reader(in);
  if (!reader.Next()) throw ConfigError("demographics file is empty (no header row)");
  std::vector<std::string> header(reader.fields().begin(), reader.fields().end());
  if (!header.empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    header[0].erase(0, 3);
  }
  const std::size_t user_col = ColumnIndex(header, "user_id", "demographics");
  const std::size_t gender_col = ColumnIndex(header, "gender", "demographics");
  const std::size_t age_col = ColumnIndex(header, "age", "demographics");
  const std::size_t needed = std::max({user_col, gender_col, age_col}) + 1;

  DemographicsTable table;
  ParseReport r;
  while (reader.Next()) {
    const auto fields = reader.fields();
    if (fields.size() == 1 && fields[0].empty()) continue;
    ++r.rows;
    const std::size_t line = reader.line_number();
    if (fields.size() < needed) {
      r.Reject(line, "too few fields");
      continue;
    }
    const std::string user(TrimView(fields[user_col]));
    if (user.empty()) {
      r.Reject(line, "empty user id");
      continue;
    }
    const std::string_view age_text = TrimView(fields[age_col]);
    int age = -1;
    const auto [ptr, ec] =
        std::from_chars(age_text.data(), age_text.data() + age_text.size(), age);
    if (ec != std::errc() || ptr != age_text.data() + age_text.size()) {
      r.Reject(line, "unparseable age '" + std::string(age_text) + "'");
      continue;
    }
    if (age < 0 || age > 120) {
      r.Reject(line, "age " + std::to_string(age) + " outside [0, 120]");
      continue;
    }
    Demographics d{user, ParseGender(fields[gender_col]), age};
    if (!table.emplace(user, std::move(d)).second) {
      throw DataError("duplicate user_id '" + user + "' in demographics (line " +
                      std::to_string(line) + ")");
    }
  }
  if (report != nullptr) *report = std::move(r);
  return table;
}

DemographicsTable ParseDemographics(const std::filesystem::path& path,
                                    ParseReport* report) {
  std::ifstream in = OpenInput(path);
  return ParseDemographics(in, report);
}

void WriteTraceCsv(std::ostream& out, std::span<const BrowsingEvent> events) {
  out << "user_id,timestamp,domain,active_seconds\n";
  std::string line;
  for (const auto& e : events) {
    line.clear();
    AppendCsvField(line, e.user_id);
    line.push_back(',');
    line += FormatIso8601(e.timestamp.time_since_epoch().count());
    line.push_back(',');
    AppendCsvField(line, e.domain);
    line.push_back(',');
    line += std::to_string(e.active_seconds);
    line.push_back('\n');
    out << line;
  }
}

void WriteTraceCsv(std::ostream& out, const TraceStore& store) {
  out << "user_id,timestamp,domain,active_seconds\n";
  std::string line;
  for (const Event& e : store.events()) {
    line.clear();
    AppendCsvField(line, store.users().name(e.user));
    line.push_back(',');
    line += FormatIso8601(e.timestamp);
    line.push_back(',');
    AppendCsvField(line, store.domains().name(e.domain));
    line.push_back(',');
    line += std::to_string(e.active_seconds);
    line.push_back('\n');
    out << line;
  }
}

void WriteDemographicsCsv(std::ostream& out,
                          std::span<const Demographics> demographics) {
  out << "user_id,gender,age\n";
  std::string line;
  for (const auto& d : demographics) {
    line.clear();
    AppendCsvField(line, d.user_id);
    line.push_back(',');
    line += GenderName(d.gender);
    line.push_back(',');
    line += std::to_string(d.age);
    line.push_back('\n');
    out << line;
  }
}

}  // namespace unicity
