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

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "test_util.h"
#include "unicity/csv.h"

namespace unicity {
namespace {

AnalysisReport Sample() {
  AnalysisReport r;
  r.command = "unicity";
  r.invocation = {"unicity", "unicity", "--trace", "t.csv"};
  r.config["n"] = {1, 2, 3};
  r.config["direction"] = "most";
  r.seed = 42;
  r.digest = {10, 200, 30};
  UniquenessResult u;
  u.n = 3;
  u.unique_fraction = 0.1 + 0.2;  // not exactly representable in 6 digits
  u.standard_error = 1.0 / 3.0;
  u.population_size = 10;
  u.unique_count = 3;
  u.per_group = std::map<std::string, GroupStat>{{"female", {0.5, 0.1, 4, 2}}};
  r.results["curve"] = Json::array({ToJson(u)});
  r.warnings = {"trace: skipped 1 of 201 rows"};
  return r;
}

TEST(AnalysisReport, RoundTripsThroughJson) {
  const AnalysisReport r = Sample();
  const std::string text = r.Serialize();
  const AnalysisReport back = AnalysisReport::FromJson(Json::parse(text));
  EXPECT_EQ(back, r);
  EXPECT_EQ(back.Serialize(), text);
  EXPECT_EQ(back.results["curve"][0]["unique_fraction"].get<double>(), 0.1 + 0.2);
}

TEST(AnalysisReport, NoSeedRoundTrips) {
  AnalysisReport r = Sample();
  r.seed.reset();
  EXPECT_EQ(AnalysisReport::FromJson(Json::parse(r.Serialize())), r);
}

TEST(AnalysisReport, MalformedIsDataError) {
  EXPECT_THROW(AnalysisReport::FromJson(Json::parse("{\"command\": 3}")), DataError);
  EXPECT_THROW(AnalysisReport::FromJson(Json::array()), DataError);
}

TEST(FormatFixed6, FixedDigits) {
  EXPECT_EQ(FormatFixed6(1.0 / 3.0), "0.333333");
  EXPECT_EQ(FormatFixed6(1.0), "1.000000");
  EXPECT_EQ(FormatFixed6(0.0), "0.000000");
}

TEST(CurveCsv, HeaderAndRows) {
  testing::TempDir dir;
  std::vector<UniquenessResult> rs(2);
  rs[0].n = 1;
  rs[0].unique_fraction = 0.25;
  rs[0].population_size = 4;
  rs[0].unique_count = 1;
  rs[1].n = 2;
  rs[1].unique_fraction = 2.0 / 3.0;
  WriteUnicityCurveCsv(dir / "c.csv", rs);
  std::ifstream in(dir / "c.csv");
  CsvReader reader(in);
  ASSERT_TRUE(reader.Next());
  std::string header;
  for (const auto& f : reader.fields()) header += (header.empty() ? "" : ",") + f;
  EXPECT_EQ(header, kUnicityCurveHeader);
  ASSERT_TRUE(reader.Next());
  EXPECT_EQ(reader.fields()[0], "1");
  EXPECT_EQ(reader.fields()[1], "most");
  EXPECT_EQ(reader.fields()[2], "0.250000");
  ASSERT_TRUE(reader.Next());
  EXPECT_EQ(reader.fields()[2], "0.666667");
  EXPECT_FALSE(reader.Next());
}

}  // namespace
}  // namespace unicity
