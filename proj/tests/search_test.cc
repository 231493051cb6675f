// Copyright 2026 The Cycles Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cycles/search.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "cycles/error.h"
#include "cycles/families.h"
#include "cycles/json_io.h"
#include "cycles/solver.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace cycles {
namespace {

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() /
          (name + "_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed())))
      .string();
}

TEST(CorpusTest, FamilyRangeNamesAndDigest) {
  std::vector<CorpusEntry> c = FamilyRangeCorpus("fishy", 4, 7);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0].name, "fishy(n=4)");
  EXPECT_EQ(CorpusDigest(c), CorpusDigest(FamilyRangeCorpus("fishy", 4, 7)));
  EXPECT_NE(CorpusDigest(c), CorpusDigest(FamilyRangeCorpus("fishy", 4, 6)));
  EXPECT_EQ(FamilyRangeCorpus("windmill", 1, 5).size(), 15u);
}

TEST(CorpusTest, FromJsonShapes) {
  nlohmann::json g = GraphToJson(CycleWithSpecial(3));
  EXPECT_EQ(CorpusFromJson(nlohmann::json::array({g, g})).size(), 2u);
  std::vector<CorpusEntry> named =
      CorpusFromJson({{"graphs", {{{"name", "tri"}, {"graph", g}}}}});
  ASSERT_EQ(named.size(), 1u);
  EXPECT_EQ(named[0].name, "tri");
  EXPECT_THROW(CorpusFromJson(nlohmann::json(3)), CyclesError);
}

TEST(ScanTest, FishyValues) {
  ScanReport r = ScanCorpus(FamilyRangeCorpus("fishy", 4, 7), {});
  ASSERT_TRUE(r.complete);
  std::vector<int> values;
  for (int n = 4; n <= 7; ++n) {
    for (const ScanRecord& rec : r.records) {
      if (rec.name == "fishy(n=" + std::to_string(n) + ")") values.push_back(*rec.grundy);
    }
  }
  EXPECT_EQ(values, (std::vector<int>{2, 3, 2, 3}));
  // n + 3 edges: odd n gives an even count with a first-player win.
  EXPECT_EQ(r.parity_violations, 2);
  for (const ScanRecord& rec : r.records) {
    EXPECT_EQ(rec.parity_violation, rec.size % 2 == 0) << rec.name;
  }
}

TEST(ScanTest, Size9IsTheOnlyViolation) {
  std::vector<CorpusEntry> c = {{"size9", Size9Counterexample()},
                                {"cone", IceCreamCone()},
                                {"cake", LayeredCake()}};
  ScanReport r = ScanCorpus(c, {});
  EXPECT_EQ(r.parity_violations, 1);
  for (const ScanRecord& rec : r.records) {
    EXPECT_EQ(rec.parity_violation, rec.name == "size9") << rec.name;
  }
  nlohmann::json summary = SummaryToJson(r);
  EXPECT_EQ(summary["parityViolations"], 1);
}

TEST(ScanTest, LongerLooseEndsBreakParity) {
  // Ends of lengths 1 and 2 at one triangle vertex: the triangle gains a
  // special vertex and a free edge hangs off it, giving 2 xor 1.
  EmbeddedGraph g = Lollipop(3, {1, 1}, std::vector<int>{1, 2});
  EXPECT_EQ(Trim(g).num_edges(), 4u);
  std::vector<int> empty(g.num_edges(), 0);
  EXPECT_EQ(testing::ReferenceGame(g).Grundy(empty), 3);
  ScanReport r = ScanCorpus({{"lollipop", g}}, {});
  EXPECT_EQ(r.parity_violations, 1);
  ScanReport pendants = ScanCorpus({{"lollipop", Lollipop(3, {1, 1})}}, {});
  EXPECT_EQ(pendants.parity_violations, 0);
}

TEST(ScanTest, TreesHaveNoViolations) {
  ScanOptions options;
  options.workers = 4;
  ScanReport r = ScanCorpus(TreeCorpus(9), options);
  EXPECT_EQ(r.corpus_size, 1u + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106);
  EXPECT_EQ(r.parity_violations, 0);
  EXPECT_EQ(r.budget_exceeded, 0);
}

TEST(ScanTest, WorkerCountDoesNotChangeOutput) {
  std::vector<CorpusEntry> c = TreeCorpus(7);
  for (CorpusEntry& e : FamilyRangeCorpus("windmill", 1, 3)) c.push_back(e);
  ScanOptions one;
  ScanOptions four;
  four.workers = 4;
  four.batch_size = 3;
  ScanReport a = ScanCorpus(c, one);
  ScanReport b = ScanCorpus(c, four);
  EXPECT_EQ(ReportJsonl(a), ReportJsonl(b));
  EXPECT_EQ(SummaryToJson(a), SummaryToJson(b));
}

TEST(ScanTest, EmptyCorpus) {
  ScanReport r = ScanCorpus({}, {});
  EXPECT_TRUE(r.complete);
  EXPECT_EQ(r.corpus_size, 0u);
  EXPECT_TRUE(r.records.empty());
  EXPECT_EQ(r.max_grundy, -1);
  EXPECT_EQ(ReportJsonl(r), "");
}

TEST(ScanTest, BudgetExceededIsRecorded) {
  ScanOptions options;
  options.node_budget = 5;
  ScanReport r = ScanCorpus({{"cone", IceCreamCone()}, {"edge", Path(1)}}, options);
  EXPECT_EQ(r.budget_exceeded, 1);
  for (const ScanRecord& rec : r.records) {
    if (rec.name == "cone") {
      EXPECT_EQ(rec.status, "budget-exceeded");
      EXPECT_FALSE(rec.grundy.has_value());
    } else {
      EXPECT_EQ(rec.status, "solved");
    }
  }
}

TEST(ScanTest, HighGrundyIsReverified) {
  ScanOptions options;
  options.threshold = 2;
  ScanReport r = ScanCorpus(FamilyRangeCorpus("fishy", 4, 5), options);
  EXPECT_EQ(r.high_grundy, 2);
  EXPECT_EQ(r.max_grundy, 3);
  for (const ScanRecord& rec : r.records) {
    EXPECT_TRUE(rec.high_grundy);
    EXPECT_TRUE(rec.reverified);
    EXPECT_EQ(rec.status, "solved");
  }
}

TEST(ScanTest, RecordJsonRoundTrip) {
  ScanReport r = ScanCorpus(FamilyRangeCorpus("cycle_with_special", 3, 5), {});
  for (const ScanRecord& rec : r.records) {
    EXPECT_EQ(RecordToJson(RecordFromJson(RecordToJson(rec))), RecordToJson(rec));
  }
}

TEST(CheckpointTest, ResumeMatchesUninterruptedRun) {
  std::vector<CorpusEntry> c = TreeCorpus(8);
  std::string path = TempPath("scan_ckpt");
  std::filesystem::remove(path);
  ScanOptions options;
  options.checkpoint_path = path;
  options.batch_size = 10;
  options.max_graphs = 25;
  ScanReport partial = ScanCorpus(c, options);
  EXPECT_FALSE(partial.complete);
  EXPECT_GE(partial.records.size(), 25u);
  EXPECT_LT(partial.records.size(), c.size());
  ASSERT_TRUE(std::filesystem::exists(path));

  options.max_graphs = 0;
  options.workers = 3;
  ScanReport resumed = ScanCorpus(c, options);
  ScanReport fresh = ScanCorpus(c, {});
  EXPECT_TRUE(resumed.complete);
  EXPECT_EQ(ReportJsonl(resumed), ReportJsonl(fresh));
  EXPECT_EQ(SummaryToJson(resumed), SummaryToJson(fresh));
  std::filesystem::remove(path);
}

TEST(CheckpointTest, DigestMismatch) {
  std::string path = TempPath("scan_mismatch");
  ScanOptions options;
  options.checkpoint_path = path;
  ScanCorpus(FamilyRangeCorpus("fishy", 4, 5), options);
  try {
    ScanCorpus(FamilyRangeCorpus("fishy", 4, 6), options);
    ADD_FAILURE();
  } catch (const CyclesError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDigestMismatch);
  }
  std::filesystem::remove(path);
}

TEST(CheckpointTest, CorruptFile) {
  std::string path = TempPath("scan_corrupt");
  {
    std::ofstream out(path);
    out << "{\"version\": 1, \"records\": [";
  }
  ScanOptions options;
  options.checkpoint_path = path;
  try {
    ScanCorpus(FamilyRangeCorpus("fishy", 4, 5), options);
    ADD_FAILURE();
  } catch (const CyclesError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCorruptState);
  }
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace cycles
