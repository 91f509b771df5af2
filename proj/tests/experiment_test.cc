// Copyright 2026 The wrig-lab Authors
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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_support.h"
#include "wrig/cut_algorithms.h"
#include "wrig/evaluation.h"
#include "wrig/experiment.h"
#include "wrig/stats.h"

namespace wrig {
namespace {

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

ExperimentSpec SmallSpec() {
  return ExperimentSpec::FromJson(R"({
    "name": "small", "regime": "fixed", "n": [10, 12], "m": 10,
    "p": [0.2, 0.35], "trials": 3,
    "algorithms": ["random", "majority", "bipartize", "exact"],
    "epsilon": 0.1, "seed": 42, "workers": 1
  })");
}

TEST(RunningStatsTest, SingleValue) {
  RunningStats stats;
  stats.Add(5);
  EXPECT_EQ(stats.count(), 1);
  EXPECT_DOUBLE_EQ(stats.mean(), 5);
  EXPECT_DOUBLE_EQ(stats.variance(), 0);
  EXPECT_FALSE(stats.variance_defined());
}

TEST(RunningStatsTest, TwoValues) {
  RunningStats stats;
  stats.Add(4);
  stats.Add(6);
  EXPECT_DOUBLE_EQ(stats.mean(), 5);
  EXPECT_DOUBLE_EQ(stats.variance(), 2);
  EXPECT_TRUE(stats.variance_defined());
  EXPECT_DOUBLE_EQ(stats.std_error(), 1);
  EXPECT_DOUBLE_EQ(stats.min(), 4);
  EXPECT_DOUBLE_EQ(stats.max(), 6);
}

TEST(RunningStatsTest, MergeMatchesSequential) {
  Rng rng(71);
  RunningStats all;
  RunningStats left;
  RunningStats right;
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.Uniform01() * 100 - 30;
    all.Add(x);
    (i % 3 == 0 ? left : right).Add(x);
  }
  left.Merge(right);
  EXPECT_EQ(left.count(), all.count());
  EXPECT_NEAR(left.mean(), all.mean(), 1e-9);
  EXPECT_NEAR(left.variance(), all.variance(), 1e-7);
  EXPECT_EQ(left.min(), all.min());
  EXPECT_EQ(left.max(), all.max());
}

TEST(SummarizeTest, HandValues) {
  TrialRecord one;
  one.random = HeuristicOutcome{5, 0, 0.0};
  const auto single = Summarize(std::vector<TrialRecord>{one});
  ASSERT_EQ(single.grid.size(), 1u);
  const auto& metric = single.grid[0].metrics.at("random");
  EXPECT_DOUBLE_EQ(metric.mean, 5);
  EXPECT_DOUBLE_EQ(metric.variance, 0);
  EXPECT_FALSE(metric.variance_defined);

  TrialRecord a = one;
  TrialRecord b = one;
  a.random->weight = 4;
  b.random->weight = 6;
  const auto pair = Summarize(std::vector<TrialRecord>{a, b});
  EXPECT_DOUBLE_EQ(pair.grid[0].metrics.at("random").mean, 5);
  EXPECT_DOUBLE_EQ(pair.grid[0].metrics.at("random").variance, 2);

  EXPECT_THROW(Summarize(std::vector<TrialRecord>{}), std::invalid_argument);
}

TEST(SummarizeTest, RandomCutMeanIsQuarterOffDiagonal) {
  Rng rng(73);
  const auto r = testing::RandomMatrix(rng, 9, 8, 0.4);
  std::vector<TrialRecord> records(10000);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto cut = RandomCut(r, static_cast<Seed>(i));
    records[i].random = HeuristicOutcome{cut.weight, 0, 0.0};
  }
  const auto summary = Summarize(records);
  const auto& metric = summary.grid[0].metrics.at("random");
  EXPECT_NEAR(metric.mean, TotalOffDiagonal(r) / 4.0, 4 * metric.std_error);
}

TEST(SummarizeTest, GroupsByGridPoint) {
  std::vector<TrialRecord> records(4);
  for (int i = 0; i < 4; ++i) {
    records[i].grid_id = i % 2;
    records[i].random = HeuristicOutcome{10, 0, 0.0};
    records[i].majority = HeuristicOutcome{i % 2 == 0 ? 12 : 15, 0, 0.0};
    records[i].bipartize = BipartizeTrialOutcome{.terminated = i != 3};
  }
  const auto summary = Summarize(records);
  ASSERT_EQ(summary.grid.size(), 2u);
  EXPECT_DOUBLE_EQ(*summary.grid[0].majority_over_random, 1.2);
  EXPECT_DOUBLE_EQ(*summary.grid[1].beta_hat, 0.5);
  EXPECT_DOUBLE_EQ(*summary.grid[0].termination_fraction, 1.0);
  EXPECT_DOUBLE_EQ(*summary.grid[1].termination_fraction, 0.5);
  EXPECT_FALSE(summary.grid[0].random_over_exact.has_value());
}

TEST(ExperimentSpecTest, ParsesAndExpandsFixedGrid) {
  const auto spec = SmallSpec();
  EXPECT_EQ(spec.name, "small");
  EXPECT_EQ(spec.trials, 3);
  EXPECT_EQ(spec.seed, 42u);
  EXPECT_TRUE(spec.Runs(CutAlgorithm::kExact));
  const auto grid = spec.Grid();
  ASSERT_EQ(grid.size(), 4u);
  EXPECT_EQ(grid[1].id, 1);
  EXPECT_EQ(grid[1].params.n, 10);
  EXPECT_DOUBLE_EQ(grid[1].params.p, 0.35);
  EXPECT_EQ(grid[2].params.n, 12);
}

TEST(ExperimentSpecTest, AlphaAndDensitySweeps) {
  const auto alpha = ExperimentSpec::FromJson(R"({
    "regime": "alpha-sweep", "n": [256, 1024], "alpha": 0.5, "p_scale": 1.0,
    "algorithms": ["random"]
  })");
  const auto grid = alpha.Grid();
  ASSERT_EQ(grid.size(), 2u);
  EXPECT_EQ(grid[0].params.m, 16);
  EXPECT_DOUBLE_EQ(grid[0].params.p, 1.0 / std::sqrt(256.0 * 16.0));
  EXPECT_EQ(grid[1].params.m, 32);

  const auto density = ExperimentSpec::FromJson(R"({
    "regime": "c-sweep", "n": 1000, "c": [0.25, 0.5], "algorithms": ["bipartize"]
  })");
  const auto points = density.Grid();
  ASSERT_EQ(points.size(), 2u);
  EXPECT_EQ(points[1].params.m, 1000);
  EXPECT_DOUBLE_EQ(points[1].params.p, 0.0005);
}

TEST(ExperimentSpecTest, RejectsBadSpecs) {
  const std::vector<std::string> bad = {
      "[]",
      "{",
      R"({"n": 5, "m": 5, "p": 0.1, "algorithms": ["random"], "bogus": 1})",
      R"({"regime": "weird", "n": 5, "m": 5, "p": 0.1, "algorithms": ["random"]})",
      R"({"n": 5, "m": 5, "p": 0.1, "algorithms": ["greedy"]})",
      R"({"n": 5, "m": 5, "p": 0.1, "algorithms": []})",
      R"({"n": 5, "m": 5, "p": 1.1, "algorithms": ["random"]})",
      R"({"n": 5, "m": 5, "algorithms": ["random"]})",
      R"({"n": 5, "m": 5, "p": 0.1, "trials": 0, "algorithms": ["random"]})",
      R"({"n": "five", "m": 5, "p": 0.1, "algorithms": ["random"]})",
      R"({"n": 5, "m": 5, "p": 0.1, "epsilon": 2, "algorithms": ["majority"]})",
  };
  for (const auto& text : bad) {
    EXPECT_THROW(ExperimentSpec::FromJson(text), std::invalid_argument) << text;
  }
}

TEST(RunExperimentTest, RandomNeverBeatsExact) {
  const auto spec = ExperimentSpec::FromJson(R"({
    "n": 10, "m": 10, "p": 0.2, "trials": 3, "algorithms": ["random", "exact"],
    "seed": 7, "workers": 2
  })");
  const auto result = RunExperiment(spec, nullptr);
  ASSERT_EQ(result.records.size(), 3u);
  for (const auto& record : result.records) {
    ASSERT_TRUE(record.random && record.exact);
    EXPECT_FALSE(record.majority || record.bipartize);
    EXPECT_LE(record.random->weight, record.exact->weight);
    EXPECT_LE(record.exact->weight, record.total_offdiag / 2);
  }
}

TEST(RunExperimentTest, CsvLayout) {
  const auto spec = SmallSpec();
  std::ostringstream csv;
  const auto result = RunExperiment(spec, &csv);
  const auto lines = Lines(csv.str());
  ASSERT_EQ(lines.size(), 2u + 12u);
  EXPECT_EQ(lines[0], "# wrig-lab schema 1");
  EXPECT_EQ(lines[1],
            "grid_id,trial,seed,n,m,p,total_offdiag,incidences,random_weight,"
            "random_disc,majority_weight,majority_disc,bipartize_terminated,"
            "bipartize_iterations,bipartize_zero_strong,"
            "bipartize_label_disjoint,bipartize_weight,bipartize_disc,"
            "exact_weight,exact_disc");
  EXPECT_EQ(lines[2].rfind("0,0,", 0), 0u);
  EXPECT_EQ(lines[13].rfind("3,2,", 0), 0u);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    EXPECT_EQ(std::count(lines[i].begin(), lines[i].end(), ','), 19);
  }
  ASSERT_EQ(result.records.size(), 12u);
  for (std::size_t i = 0; i < result.records.size(); ++i) {
    std::ostringstream row;
    WriteCsvRow(row, result.records[i], false);
    EXPECT_EQ(row.str(), lines[i + 2] + "\n");
  }
}

TEST(RunExperimentTest, MissingAlgorithmsLeaveEmptyCells) {
  TrialRecord record;
  record.grid_id = 1;
  record.trial = 2;
  record.seed = 3;
  record.n = 4;
  record.m = 5;
  record.p = 0.1;
  record.total_offdiag = 6;
  record.incidences = 7;
  record.majority = HeuristicOutcome{8, 1, 0.5};
  std::ostringstream row;
  WriteCsvRow(row, record, false);
  EXPECT_EQ(row.str(), "1,2,3,4,5,0.10000000000000001,6,7,,,8,1,,,,,,,,\n");
  std::ostringstream timed;
  WriteCsvRow(timed, record, true);
  EXPECT_EQ(timed.str(),
            "1,2,3,4,5,0.10000000000000001,6,7,,,8,1,,,,,,,,,,0.500,,\n");
}

TEST(RunExperimentTest, DeterministicAcrossRunsAndWorkers) {
  auto spec = SmallSpec();
  std::ostringstream first;
  std::ostringstream second;
  std::ostringstream parallel;
  RunExperiment(spec, &first);
  RunExperiment(spec, &second);
  spec.workers = 4;
  RunExperiment(spec, &parallel);
  EXPECT_EQ(first.str(), second.str());
  EXPECT_EQ(first.str(), parallel.str());
}

TEST(RunExperimentTest, WritesCsvAndSummaryFiles) {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("wrig_experiment_test_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  auto spec = SmallSpec();
  spec.csv_path = (dir / "out.csv").string();
  spec.summary_path = (dir / "summary.json").string();
  const auto result = RunExperiment(spec);
  std::ifstream csv(spec.csv_path);
  std::stringstream csv_text;
  csv_text << csv.rdbuf();
  EXPECT_EQ(Lines(csv_text.str()).size(), 14u);

  std::ifstream summary_file(spec.summary_path);
  const auto summary = nlohmann::json::parse(summary_file);
  EXPECT_EQ(summary.at("name"), "small");
  ASSERT_EQ(summary.at("grid").size(), 4u);
  const auto& point = summary.at("grid")[0];
  EXPECT_EQ(point.at("metrics").at("random").at("count"), 3);
  EXPECT_TRUE(point.at("ratios").contains("random_over_exact"));
  EXPECT_TRUE(point.at("ratios").contains("beta_hat"));
  EXPECT_EQ(result.summary.grid.size(), 4u);
  std::filesystem::remove_all(dir);
}

TEST(RunExperimentTest, ReportsAuditsAndBudgets) {
  auto spec = ExperimentSpec::FromJson(R"({
    "regime": "c-sweep", "n": 40, "c": 0.5, "trials": 1000,
    "algorithms": ["random", "majority", "bipartize"], "seed": 5
  })");
  const auto result = RunExperiment(spec, nullptr);
  std::int64_t audited = 0;
  for (const auto& record : result.records) {
    audited += record.audited;
    ASSERT_TRUE(record.bipartize.has_value());
    if (record.bipartize->terminated) {
      EXPECT_TRUE(record.bipartize->weight.has_value());
    }
  }
  EXPECT_EQ(result.audited, audited);
  EXPECT_GT(audited, 0);
  EXPECT_EQ(result.nonterminated, 0);
}

}  // namespace
}  // namespace wrig
