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

#ifndef WRIG_EXPERIMENT_H_
#define WRIG_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wrig/cut_algorithms.h"
#include "wrig/random.h"
#include "wrig/sampling.h"
#include "wrig/stats.h"

namespace wrig {

inline constexpr std::string_view kCsvSchemaLine = "# wrig-lab schema 1";

enum class Regime {
  kFixed,         // axes n, m, p
  kAlphaSweep,    // axes n, alpha and p (or p_scale: p = scale / sqrt(nm))
  kDensitySweep,  // axes n, c; m = n, p = c / n
};

struct GridPoint {
  int id = 0;
  ModelParams params;
};

// Monte Carlo experiment configuration. The grid is the cartesian product of
// the axes in the order listed for the regime, the first axis outermost.
//
// The file form is a JSON object with flat keys:
//   name, regime ("fixed" | "alpha-sweep" | "c-sweep"), n, m, alpha, p,
//   p_scale, c (numbers or arrays), trials, algorithms (array of "random",
//   "majority", "exact", "bipartize"), epsilon, seed, max_rematch,
//   exact_cap, csv, summary, workers, timing.
struct ExperimentSpec {
  std::string name = "experiment";
  Regime regime = Regime::kFixed;
  std::vector<Vertex> n_values;
  std::vector<Label> m_values;
  std::vector<double> alpha_values;
  std::vector<double> p_values;
  std::vector<double> p_scale_values;
  std::vector<double> c_values;
  std::int64_t trials = 1;
  std::vector<CutAlgorithm> algorithms;
  double epsilon = 0.0;
  Seed seed = 0;
  std::int64_t max_rematch = 0;  // <= 0: DefaultMaxRematch(n)
  Vertex exact_cap = 24;         // exact oracle runs only when n <= cap
  std::string csv_path;
  std::string summary_path;
  int workers = 0;               // 0: hardware concurrency
  bool timing = false;           // adds wall-time columns to the CSV

  bool Runs(CutAlgorithm algorithm) const;
  // Throws std::invalid_argument when the spec or any grid point is invalid.
  void Validate() const;
  std::vector<GridPoint> Grid() const;

  static ExperimentSpec FromJson(const std::string& text);
  static ExperimentSpec FromFile(const std::string& path);
};

struct HeuristicOutcome {
  Weight weight = 0;
  Weight discrepancy = 0;
  double wall_ms = 0.0;
};

struct BipartizeTrialOutcome {
  bool terminated = false;
  std::int64_t iterations = 0;
  std::int64_t zero_strong_cycles = 0;
  bool label_disjoint = true;
  std::optional<Weight> weight;  // only when terminated
  std::optional<Weight> discrepancy;
  double wall_ms = 0.0;
};

struct ExactOutcome {
  Weight weight = 0;       // max cut
  Weight discrepancy = 0;  // disc(Sigma)
  double wall_ms = 0.0;
};

struct TrialRecord {
  int grid_id = 0;
  std::int64_t trial = 0;
  Seed seed = 0;
  Vertex n = 0;
  Label m = 0;
  double p = 0.0;
  Weight total_offdiag = 0;
  std::int64_t incidences = 0;
  std::optional<HeuristicOutcome> random;
  std::optional<HeuristicOutcome> majority;
  std::optional<BipartizeTrialOutcome> bipartize;
  std::optional<ExactOutcome> exact;
  bool audited = false;
};

struct MetricSummary {
  std::int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // n - 1 denominator, 0 when undefined
  bool variance_defined = false;
  double std_error = 0.0;
  double min = 0.0;
  double max = 0.0;

  static MetricSummary From(const RunningStats& stats);
};

struct GridSummary {
  int grid_id = 0;
  Vertex n = 0;
  Label m = 0;
  double p = 0.0;
  // Keyed by "random", "majority", "exact", "bipartize", "total_offdiag",
  // "exact_discrepancy", "bipartize_iterations".
  std::map<std::string, MetricSummary> metrics;
  std::optional<double> random_over_exact;
  std::optional<double> majority_over_random;
  std::optional<double> beta_hat;  // mean(majority) / mean(random) - 1
  // Var(MaxCut) / E[MaxCut]^2 from the exact oracle.
  std::optional<double> maxcut_concentration;
  std::optional<double> total_offdiag_cv;  // std / mean
  std::optional<double> majority_cv;
  std::optional<double> termination_fraction;
  std::optional<double> label_disjoint_fraction;
};

struct SummaryStats {
  std::vector<GridSummary> grid;  // ordered by grid id
};

// Throws std::invalid_argument for an empty input.
SummaryStats Summarize(std::span<const TrialRecord> records);

struct ExperimentResult {
  std::vector<TrialRecord> records;  // ordered by (grid id, trial)
  SummaryStats summary;
  std::int64_t audited = 0;
  std::int64_t nonterminated = 0;
};

// Runs one trial; its seed is DeriveSeed(spec.seed, grid id, trial).
TrialRecord RunTrial(const ExperimentSpec& spec, const GridPoint& point,
                     std::int64_t trial);

// Runs every (grid point, trial) on a worker pool. Records are streamed to
// csv (when non-null) in (grid id, trial) order as soon as their
// predecessors are done, so the bytes do not depend on the worker count.
// About 1% of trials re-verify every reported weight against the direct edge
// sum; a mismatch throws std::runtime_error.
ExperimentResult RunExperiment(const ExperimentSpec& spec, std::ostream* csv);

// As above, writing the CSV and JSON summary to spec.csv_path and
// spec.summary_path when they are set.
ExperimentResult RunExperiment(const ExperimentSpec& spec);

void WriteCsvHeader(std::ostream& out, bool timing);
void WriteCsvRow(std::ostream& out, const TrialRecord& record, bool timing);
std::string SummaryToJson(const ExperimentSpec& spec,
                          const SummaryStats& summary);

}  // namespace wrig

#endif  // WRIG_EXPERIMENT_H_
