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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_util.h"
#include "unicity/csv.h"
#include "unicity/timestamp.h"

namespace unicity {
namespace {

TEST(NormalizeDomain, Examples) {
  EXPECT_EQ(NormalizeDomain("WWW.Spiegel.de"), "spiegel.de");
  EXPECT_EQ(NormalizeDomain("maps.google.de"), "maps.google.de");
  EXPECT_EQ(NormalizeDomain(" News.Example.COM "), "news.example.com");
  EXPECT_EQ(NormalizeDomain("www.www.x.org"), "www.x.org");
  EXPECT_EQ(NormalizeDomain("   "), "");
}

TEST(ReadTrace, HeaderOnly) {
  std::istringstream in("user_id,timestamp,domain,active_seconds\n");
  ParseReport report;
  TraceStore store = LoadTrace(in, ColumnMapping{}, &report);
  EXPECT_EQ(store.event_count(), 0u);
  EXPECT_EQ(report.rows, 0u);
  EXPECT_EQ(report.skipped, 0u);
}

TEST(ReadTrace, NormalizesRow) {
  std::istringstream in(
      "user_id,timestamp,domain,active_seconds\n"
      "u1,2018-10-01T09:00:00Z,WWW.Example.DE,30\n");
  TraceStore store = LoadTrace(in, ColumnMapping{});
  const auto events = store.ToBrowsingEvents();
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].user_id, "u1");
  EXPECT_EQ(events[0].domain, "example.de");
  EXPECT_EQ(events[0].active_seconds, 30u);
  using namespace std::chrono;
  EXPECT_EQ(events[0].timestamp, sys_days(year{2018} / October / 1) + hours(9));
}

TEST(ReadTrace, MissingColumnIsConfigError) {
  std::istringstream in("user_id,timestamp,domain\nu1,2018-10-01T09:00:00Z,a.de\n");
  EXPECT_THROW(LoadTrace(in, ColumnMapping{}), ConfigError);
}

TEST(ReadTrace, SkipsBadRowsUpToTenPercent) {
  std::string csv = "user_id,timestamp,domain,active_seconds\n";
  for (int i = 0; i < 18; ++i) csv += "u1,2018-10-01T09:00:00Z,a.de,5\n";
  csv += "u1,not-a-time,a.de,5\n";
  csv += "u1,2018-10-01T09:00:00Z,a.de,-3\n";
  std::istringstream ok(csv);
  ParseReport report;
  TraceStore store = LoadTrace(ok, ColumnMapping{}, &report);
  EXPECT_EQ(report.rows, 20u);
  EXPECT_EQ(report.skipped, 2u);
  EXPECT_EQ(store.event_count(), 18u);
  EXPECT_FALSE(report.diagnostics.empty());

  std::istringstream bad(csv + ",2018-10-01T09:00:00Z,a.de,5\n");
  EXPECT_THROW(LoadTrace(bad, ColumnMapping{}), DataError);
}

TEST(ReadTrace, MappingAndTimestampFormats) {
  ColumnMapping m;
  m.user_column = "uid";
  m.timestamp_column = "ts";
  m.domain_column = "host";
  m.duration_column = "dwell";
  m.timestamp_format = "unix";
  std::istringstream in("host,uid,dwell,ts\n\"Www.A.de\",x,2.5,1538384400\n");
  TraceStore store = LoadTrace(in, m);
  const auto events = store.ToBrowsingEvents();
  ASSERT_EQ(events.size(), 1u);
  EXPECT_EQ(events[0].domain, "a.de");
  EXPECT_EQ(events[0].active_seconds, 3u);  // half rounds up
  EXPECT_EQ(events[0].timestamp.time_since_epoch().count(), 1538384400);
}

TEST(Timestamp, OffsetsAndFormats) {
  EXPECT_EQ(*ParseIso8601("2018-10-01T09:00:00Z"), 1538384400);
  EXPECT_EQ(*ParseIso8601("2018-10-01T11:00:00+02:00"), 1538384400);
  EXPECT_EQ(*ParseIso8601("2018-10-01 11:00:00", 7200), 1538384400);
  EXPECT_FALSE(ParseIso8601("2018-13-01T00:00:00Z").has_value());
  EXPECT_EQ(FormatIso8601(1538384400), "2018-10-01T09:00:00Z");
  EXPECT_EQ(*ParseTimestamp("1538384400000", TimestampFormat::Parse("unix_ms")), 1538384400);
  EXPECT_EQ(*ParseTimestamp("01/10/2018 09:00", TimestampFormat::Parse("%d/%m/%Y %H:%M")),
            1538384400);
  EXPECT_EQ(*ParseUtcOffset("-05:30"), -(5 * 3600 + 30 * 60));
}

TEST(Csv, QuotedFieldsAndCrlf) {
  std::istringstream in("a,\"b,\"\"c\"\"\",d\r\n\"multi\nline\",x,y\n");
  CsvReader r(in);
  ASSERT_TRUE(r.Next());
  ASSERT_EQ(r.fields().size(), 3u);
  EXPECT_EQ(r.fields()[1], "b,\"c\"");
  EXPECT_EQ(r.fields()[2], "d");
  ASSERT_TRUE(r.Next());
  EXPECT_EQ(r.fields()[0], "multi\nline");
  EXPECT_FALSE(r.Next());

  std::string line;
  AppendCsvField(line, "he said \"hi\", twice");
  EXPECT_EQ(line, "\"he said \"\"hi\"\", twice\"");
}

TEST(Demographics, AliasesAndFallback) {
  std::istringstream in(
      "user_id,gender,age\nu1,female,29\nu2,m,40\nu3,diverse,51\nu4,Woman,33\n");
  const DemographicsTable t = ParseDemographics(in);
  ASSERT_EQ(t.size(), 4u);
  EXPECT_EQ(t.at("u1"), (Demographics{"u1", Gender::kFemale, 29}));
  EXPECT_EQ(t.at("u2"), (Demographics{"u2", Gender::kMale, 40}));
  EXPECT_EQ(t.at("u3"), (Demographics{"u3", Gender::kOtherUnknown, 51}));
  EXPECT_EQ(t.at("u4").gender, Gender::kFemale);
}

TEST(Demographics, DuplicateUserIsDataError) {
  std::istringstream in("user_id,gender,age\nu1,f,29\nu1,m,30\n");
  EXPECT_THROW(ParseDemographics(in), DataError);
}

TEST(Demographics, OutOfRangeAgeSkipped) {
  std::string csv = "user_id,gender,age\nu0,f,130\n";
  for (int i = 1; i <= 20; ++i) csv += "u" + std::to_string(i) + ",m,30\n";
  std::istringstream in(csv);
  ParseReport report;
  const DemographicsTable t = ParseDemographics(in, &report);
  EXPECT_EQ(t.size(), 20u);
  EXPECT_EQ(report.skipped, 1u);
  EXPECT_EQ(t.count("u0"), 0u);
}

TEST(Snapshot, RoundTripIsByteIdentical) {
  DemographicsTable demo;
  demo["u1"] = {"u1", Gender::kMale, 44};
  TraceStore store =
      testing::StoreFromVisits({{"u1", "a.de", 3, 90}, {"u2", "b.de", 1, 10}, {"u2", "a.de", 2, 0}})
          .WithDemographics(demo);
  std::stringstream first;
  WriteSnapshot(first, store);
  TraceStore back = ReadSnapshot(first);
  EXPECT_EQ(back.ToBrowsingEvents(), store.ToBrowsingEvents());
  ASSERT_NE(back.demographics(0), nullptr);
  EXPECT_EQ(back.demographics(0)->age, 44);
  std::stringstream second;
  WriteSnapshot(second, back);
  EXPECT_EQ(first.str(), second.str());
}

TEST(Snapshot, RejectsBadMagicAndTruncation) {
  std::stringstream junk("NOPE\x01rest");
  EXPECT_THROW(ReadSnapshot(junk), DataError);
  std::stringstream full;
  WriteSnapshot(full, testing::StoreFromVisits({{"u1", "a.de", 2, 4}}));
  const std::string bytes = full.str();
  std::stringstream cut(bytes.substr(0, bytes.size() - 3));
  EXPECT_THROW(ReadSnapshot(cut), DataError);
}

TEST(ParseTrace, IdempotentSnapshot) {
  testing::TempDir dir;
  {
    std::ofstream f(dir / "t.csv");
    f << "user_id,timestamp,domain,active_seconds\n"
         "b,2018-10-01T10:00:00Z,x.de,3\n"
         "a,2018-10-01T09:00:00Z,www.Y.de,4\n"
         "b,2018-10-01T08:00:00Z,x.de,1\n";
  }
  std::stringstream s1, s2;
  WriteSnapshot(s1, LoadTrace(dir / "t.csv", ColumnMapping{}));
  WriteSnapshot(s2, LoadTrace(dir / "t.csv", ColumnMapping{}));
  EXPECT_EQ(s1.str(), s2.str());
  EXPECT_EQ(ParseTrace(dir / "t.csv", ColumnMapping{}).size(), 3u);
}

}  // namespace
}  // namespace unicity
