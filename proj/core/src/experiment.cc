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

#include "wrig/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "wrig/bipartization.h"
#include "wrig/brute_force.h"
#include "wrig/evaluation.h"
#include "wrig/intersection_graph.h"

namespace wrig {
namespace {

using Json = nlohmann::json;

// Stream indices below a trial seed.
enum : std::uint64_t {
  kStreamSample = 0,
  kStreamRandom = 1,
  kStreamMajority = 2,
  kStreamBipartize = 3,
};

template <typename T>
std::vector<T> ReadAxis(const Json& doc, const char* key) {
  std::vector<T> values;
  if (!doc.contains(key)) return values;
  const Json& node = doc.at(key);
  if (node.is_array()) {
    for (const auto& item : node) values.push_back(item.get<T>());
  } else {
    values.push_back(node.get<T>());
  }
  return values;
}

CutAlgorithm ParseAlgorithm(const std::string& name) {
  if (name == "random") return CutAlgorithm::kRandom;
  if (name == "majority") return CutAlgorithm::kMajority;
  if (name == "exact") return CutAlgorithm::kExact;
  if (name == "bipartize") return CutAlgorithm::kBipartization;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void Audit(const WeightedIntersectionGraph& graph, const Coloring& coloring,
           Weight reported, std::string_view what) {
  const Weight direct = CutWeightDirect(graph, coloring);
  if (direct != reported) {
    throw std::runtime_error(fmt::format(
        "audit failed for {}: reported {} but edge sum is {}", what, reported,
        direct));
  }
}

Json MetricToJson(const MetricSummary& metric) {
  return Json{{"count", metric.count},
              {"mean", metric.mean},
              {"variance", metric.variance},
              {"variance_defined", metric.variance_defined},
              {"std_error", metric.std_error},
              {"min", metric.min},
              {"max", metric.max}};
}

std::string_view RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kFixed:
      return "fixed";
    case Regime::kAlphaSweep:
      return "alpha-sweep";
    case Regime::kDensitySweep:
      return "c-sweep";
  }
  return "fixed";
}

}  // namespace

bool ExperimentSpec::Runs(CutAlgorithm algorithm) const {
  return std::find(algorithms.begin(), algorithms.end(), algorithm) !=
         algorithms.end();
}

void ExperimentSpec::Validate() const {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (algorithms.empty()) {
    throw std::invalid_argument("at least one algorithm is required");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
  if (workers < 0) throw std::invalid_argument("workers must be >= 0");
  if (Grid().empty()) throw std::invalid_argument("experiment grid is empty");
}

std::vector<GridPoint> ExperimentSpec::Grid() const {
  std::vector<GridPoint> grid;
  int id = 0;
  auto add = [&](ModelParams params) {
    params.Validate();
    grid.push_back({id++, params});
  };
  switch (regime) {
    case Regime::kFixed:
      for (Vertex n : n_values) {
        for (Label m : m_values) {
          for (double p : p_values) add(ModelParams::Fixed(n, m, p));
        }
      }
      break;
    case Regime::kAlphaSweep:
      if (!p_values.empty() && !p_scale_values.empty()) {
        throw std::invalid_argument("give either p or p_scale, not both");
      }
      for (Vertex n : n_values) {
        for (double alpha : alpha_values) {
          const Label m = LabelCountForAlpha(n, alpha);
          if (p_scale_values.empty()) {
            for (double p : p_values) add(ModelParams::WithAlpha(n, alpha, p));
          } else {
            for (double scale : p_scale_values) {
              const double p =
                  scale / std::sqrt(static_cast<double>(n) * static_cast<double>(m));
              add(ModelParams::WithAlpha(n, alpha, p));
            }
          }
        }
      }
      break;
    case Regime::kDensitySweep:
      for (Vertex n : n_values) {
        for (double c : c_values) add(ModelParams::WithDensity(n, c));
      }
      break;
  }
  return grid;
}

ExperimentSpec ExperimentSpec::FromJson(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("spec is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("spec must be an object");

  static const std::vector<std::string> kKnown = {
      "name",   "regime",  "n",           "m",         "alpha",   "p",
      "p_scale", "c",      "trials",      "algorithms", "epsilon", "seed",
      "max_rematch", "exact_cap", "csv",  "summary",   "workers", "timing"};
  for (const auto& [key, value] : doc.items()) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw std::invalid_argument("unknown spec key '" + key + "'");
    }
  }

  ExperimentSpec spec;
  try {
    spec.name = doc.value("name", spec.name);
    const std::string regime = doc.value("regime", std::string("fixed"));
    if (regime == "fixed") {
      spec.regime = Regime::kFixed;
    } else if (regime == "alpha-sweep") {
      spec.regime = Regime::kAlphaSweep;
    } else if (regime == "c-sweep") {
      spec.regime = Regime::kDensitySweep;
    } else {
      throw std::invalid_argument("unknown regime '" + regime + "'");
    }
    spec.n_values = ReadAxis<Vertex>(doc, "n");
    spec.m_values = ReadAxis<Label>(doc, "m");
    spec.alpha_values = ReadAxis<double>(doc, "alpha");
    spec.p_values = ReadAxis<double>(doc, "p");
    spec.p_scale_values = ReadAxis<double>(doc, "p_scale");
    spec.c_values = ReadAxis<double>(doc, "c");
    spec.trials = doc.value("trials", spec.trials);
    for (const auto& name : ReadAxis<std::string>(doc, "algorithms")) {
      spec.algorithms.push_back(ParseAlgorithm(name));
    }
    spec.epsilon = doc.value("epsilon", spec.epsilon);
    spec.seed = doc.value("seed", spec.seed);
    spec.max_rematch = doc.value("max_rematch", spec.max_rematch);
    spec.exact_cap = doc.value("exact_cap", spec.exact_cap);
    spec.csv_path = doc.value("csv", spec.csv_path);
    spec.summary_path = doc.value("summary", spec.summary_path);
    spec.workers = doc.value("workers", spec.workers);
    spec.timing = doc.value("timing", spec.timing);
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad spec value: ") + e.what());
  }
  spec.Validate();
  return spec;
}

ExperimentSpec ExperimentSpec::FromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return FromJson(text.str());
}

TrialRecord RunTrial(const ExperimentSpec& spec, const GridPoint& point,
                     std::int64_t trial) {
  const auto& params = point.params;
  TrialRecord record;
  record.grid_id = point.id;
  record.trial = trial;
  record.seed = DeriveSeed(spec.seed, static_cast<std::uint64_t>(point.id),
                           static_cast<std::uint64_t>(trial));
  record.n = params.n;
  record.m = params.m;
  record.p = params.p;
  record.audited = Mix64(record.seed) % 100 == 0;

  const RepresentationMatrix matrix =
      SampleMatrix(params, DeriveSeed(record.seed, kStreamSample));
  record.total_offdiag = TotalOffDiagonal(matrix);
  record.incidences = matrix.incidence_count();

  std::optional<WeightedIntersectionGraph> graph;
  if (record.audited) graph = BuildGraph(matrix);

  if (spec.Runs(CutAlgorithm::kRandom)) {
    const auto start = std::chrono::steady_clock::now();
    const CutResult cut =
        RandomCut(matrix, DeriveSeed(record.seed, kStreamRandom));
    HeuristicOutcome outcome{cut.weight, Discrepancy(matrix, cut.coloring),
                             ElapsedMs(start)};
    if (graph) Audit(*graph, cut.coloring, cut.weight, "random");
    record.random = outcome;
  }
  if (spec.Runs(CutAlgorithm::kMajority)) {
    const auto start = std::chrono::steady_clock::now();
    const CutResult cut =
        MajorityCut(matrix, MajorityConfig{.epsilon = spec.epsilon},
                    DeriveSeed(record.seed, kStreamMajority));
    HeuristicOutcome outcome{cut.weight, Discrepancy(matrix, cut.coloring),
                             ElapsedMs(start)};
    if (graph) Audit(*graph, cut.coloring, cut.weight, "majority");
    record.majority = outcome;
  }
  if (spec.Runs(CutAlgorithm::kBipartization)) {
    const auto start = std::chrono::steady_clock::now();
    const auto result = WeakBipartization(
        matrix, DeriveSeed(record.seed, kStreamBipartize), spec.max_rematch);
    BipartizeTrialOutcome outcome;
    outcome.terminated = result.terminated;
    outcome.iterations = result.iterations;
    outcome.zero_strong_cycles =
        static_cast<std::int64_t>(result.zero_strong_cycles.size());
    outcome.label_disjoint = result.label_disjoint;
    if (result.terminated) {
      const Coloring coloring = ExtractColoring(result);
      outcome.weight = CutWeight(matrix, coloring);
      outcome.discrepancy = Discrepancy(matrix, coloring);
      if (graph) Audit(*graph, coloring, *outcome.weight, "bipartize");
    }
    outcome.wall_ms = ElapsedMs(start);
    record.bipartize = outcome;
  }
  if (spec.Runs(CutAlgorithm::kExact) && params.n <= spec.exact_cap) {
    const auto start = std::chrono::steady_clock::now();
    const CutResult cut = BruteForceMaxCut(matrix, spec.exact_cap);
    const DiscrepancyResult disc =
        BruteForceMinDiscrepancy(matrix, spec.exact_cap);
    if (graph) Audit(*graph, cut.coloring, cut.weight, "exact");
    record.exact = ExactOutcome{cut.weight, disc.discrepancy, ElapsedMs(start)};
  }
  return record;
}

ExperimentResult RunExperiment(const ExperimentSpec& spec, std::ostream* csv) {
  spec.Validate();
  const std::vector<GridPoint> grid = spec.Grid();
  const std::int64_t total = static_cast<std::int64_t>(grid.size()) * spec.trials;

  int workers = spec.workers;
  if (workers == 0) {
    workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  workers = static_cast<int>(std::min<std::int64_t>(workers, total));

  std::vector<std::optional<TrialRecord>> slots(static_cast<std::size_t>(total));
  std::atomic<std::int64_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex mutex;
  std::condition_variable ready;
  std::exception_ptr error;

  if (csv) WriteCsvHeader(*csv, spec.timing);

  auto work = [&] {
    while (!failed.load()) {
      const std::int64_t index = next.fetch_add(1);
      if (index >= total) return;
      const auto& point = grid[static_cast<std::size_t>(index / spec.trials)];
      try {
        TrialRecord record = RunTrial(spec, point, index % spec.trials);
        std::lock_guard lock(mutex);
        slots[static_cast<std::size_t>(index)] = std::move(record);
      } catch (...) {
        std::lock_guard lock(mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
      }
      ready.notify_one();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);

  ExperimentResult result;
  result.records.reserve(static_cast<std::size_t>(total));
  for (std::int64_t index = 0; index < total; ++index) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] {
      return failed.load() || slots[static_cast<std::size_t>(index)].has_value();
    });
    if (failed.load()) break;
    TrialRecord record = std::move(*slots[static_cast<std::size_t>(index)]);
    slots[static_cast<std::size_t>(index)].reset();
    lock.unlock();
    if (csv) WriteCsvRow(*csv, record, spec.timing);
    if (record.audited) ++result.audited;
    if (record.bipartize && !record.bipartize->terminated) ++result.nonterminated;
    result.records.push_back(std::move(record));
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
  if (csv) csv->flush();

  result.summary = Summarize(result.records);
  return result;
}

ExperimentResult RunExperiment(const ExperimentSpec& spec) {
  std::ofstream csv_file;
  if (!spec.csv_path.empty()) {
    csv_file.open(spec.csv_path, std::ios::binary);
    if (!csv_file) throw std::runtime_error("cannot write " + spec.csv_path);
  }
  ExperimentResult result =
      RunExperiment(spec, spec.csv_path.empty() ? nullptr : &csv_file);
  if (csv_file.is_open()) {
    csv_file.close();
    if (!csv_file) throw std::runtime_error("failed writing " + spec.csv_path);
  }
  if (!spec.summary_path.empty()) {
    std::ofstream summary(spec.summary_path, std::ios::binary);
    summary << SummaryToJson(spec, result.summary) << '\n';
    if (!summary) throw std::runtime_error("cannot write " + spec.summary_path);
  }
  return result;
}

MetricSummary MetricSummary::From(const RunningStats& stats) {
  MetricSummary metric;
  metric.count = stats.count();
  metric.mean = stats.mean();
  metric.variance = stats.variance();
  metric.variance_defined = stats.variance_defined();
  metric.std_error = stats.std_error();
  metric.min = stats.min();
  metric.max = stats.max();
  return metric;
}

SummaryStats Summarize(std::span<const TrialRecord> records) {
  if (records.empty()) throw std::invalid_argument("no records to summarize");

  struct Accumulator {
    GridSummary summary;
    std::map<std::string, RunningStats> stats;
    std::int64_t bipartize_runs = 0;
    std::int64_t terminated = 0;
    std::int64_t disjoint = 0;
  };
  std::map<int, Accumulator> groups;

  for (const auto& record : records) {
    auto& group = groups[record.grid_id];
    group.summary.grid_id = record.grid_id;
    group.summary.n = record.n;
    group.summary.m = record.m;
    group.summary.p = record.p;
    auto& stats = group.stats;
    stats["total_offdiag"].Add(static_cast<double>(record.total_offdiag));
    if (record.random) stats["random"].Add(static_cast<double>(record.random->weight));
    if (record.majority) {
      stats["majority"].Add(static_cast<double>(record.majority->weight));
    }
    if (record.exact) {
      stats["exact"].Add(static_cast<double>(record.exact->weight));
      stats["exact_discrepancy"].Add(static_cast<double>(record.exact->discrepancy));
    }
    if (record.bipartize) {
      ++group.bipartize_runs;
      stats["bipartize_iterations"].Add(static_cast<double>(record.bipartize->iterations));
      if (record.bipartize->terminated) ++group.terminated;
      if (record.bipartize->label_disjoint) ++group.disjoint;
      if (record.bipartize->weight) {
        stats["bipartize"].Add(static_cast<double>(*record.bipartize->weight));
      }
    }
  }

  SummaryStats summary;
  for (auto& [id, group] : groups) {
    GridSummary& out = group.summary;
    for (const auto& [key, stats] : group.stats) {
      out.metrics[key] = MetricSummary::From(stats);
    }
    auto mean_of = [&](const char* key) -> std::optional<double> {
      const auto it = group.stats.find(key);
      if (it == group.stats.end() || it->second.count() == 0) return std::nullopt;
      return it->second.mean();
    };
    const auto random = mean_of("random");
    const auto majority = mean_of("majority");
    const auto exact = mean_of("exact");
    if (random && exact && *exact != 0.0) out.random_over_exact = *random / *exact;
    if (random && majority && *random != 0.0) {
      out.majority_over_random = *majority / *random;
      out.beta_hat = *majority / *random - 1.0;
    }
    if (exact && *exact != 0.0) {
      out.maxcut_concentration =
          group.stats["exact"].variance() / (*exact * *exact);
    }
    if (const auto offdiag = mean_of("total_offdiag"); offdiag && *offdiag != 0.0) {
      out.total_offdiag_cv = group.stats["total_offdiag"].stddev() / *offdiag;
    }
    if (majority && *majority != 0.0) {
      out.majority_cv = group.stats["majority"].stddev() / *majority;
    }
    if (group.bipartize_runs > 0) {
      const auto runs = static_cast<double>(group.bipartize_runs);
      out.termination_fraction = static_cast<double>(group.terminated) / runs;
      out.label_disjoint_fraction = static_cast<double>(group.disjoint) / runs;
    }
    summary.grid.push_back(std::move(out));
  }
  return summary;
}

void WriteCsvHeader(std::ostream& out, bool timing) {
  out << kCsvSchemaLine << '\n'
      << "grid_id,trial,seed,n,m,p,total_offdiag,incidences,"
         "random_weight,random_disc,majority_weight,majority_disc,"
         "bipartize_terminated,bipartize_iterations,bipartize_zero_strong,"
         "bipartize_label_disjoint,bipartize_weight,bipartize_disc,"
         "exact_weight,exact_disc";
  if (timing) out << ",random_ms,majority_ms,bipartize_ms,exact_ms";
  out << '\n';
}

void WriteCsvRow(std::ostream& out, const TrialRecord& r, bool timing) {
  std::string row = fmt::format("{},{},{},{},{},{:.17g},{},{}", r.grid_id,
                                r.trial, r.seed, r.n, r.m, r.p,
                                r.total_offdiag, r.incidences);
  auto cell = [&row](const auto& value) { row += fmt::format(",{}", value); };
  auto empty = [&row](int count) { row.append(static_cast<std::size_t>(count), ','); };

  if (r.random) {
    cell(r.random->weight);
    cell(r.random->discrepancy);
  } else {
    empty(2);
  }
  if (r.majority) {
    cell(r.majority->weight);
    cell(r.majority->discrepancy);
  } else {
    empty(2);
  }
  if (r.bipartize) {
    const auto& b = *r.bipartize;
    cell(b.terminated ? 1 : 0);
    cell(b.iterations);
    cell(b.zero_strong_cycles);
    cell(b.label_disjoint ? 1 : 0);
    if (b.weight) cell(*b.weight); else empty(1);
    if (b.discrepancy) cell(*b.discrepancy); else empty(1);
  } else {
    empty(6);
  }
  if (r.exact) {
    cell(r.exact->weight);
    cell(r.exact->discrepancy);
  } else {
    empty(2);
  }
  if (timing) {
    auto ms = [&](bool present, double value) {
      if (present) row += fmt::format(",{:.3f}", value); else empty(1);
    };
    ms(r.random.has_value(), r.random ? r.random->wall_ms : 0.0);
    ms(r.majority.has_value(), r.majority ? r.majority->wall_ms : 0.0);
    ms(r.bipartize.has_value(), r.bipartize ? r.bipartize->wall_ms : 0.0);
    ms(r.exact.has_value(), r.exact ? r.exact->wall_ms : 0.0);
  }
  out << row << '\n';
}

std::string SummaryToJson(const ExperimentSpec& spec,
                          const SummaryStats& summary) {
  Json doc;
  doc["name"] = spec.name;
  doc["schema"] = 1;
  doc["regime"] = RegimeName(spec.regime);
  doc["trials"] = spec.trials;
  doc["seed"] = spec.seed;
  Json grid = Json::array();
  for (const auto& point : summary.grid) {
    Json entry{{"grid_id", point.grid_id},
               {"n", point.n},
               {"m", point.m},
               {"p", point.p}};
    Json metrics = Json::object();
    for (const auto& [key, metric] : point.metrics) {
      metrics[key] = MetricToJson(metric);
    }
    entry["metrics"] = std::move(metrics);
    Json ratios = Json::object();
    auto put = [&ratios](const char* key, const std::optional<double>& value) {
      if (value) ratios[key] = *value;
    };
    put("random_over_exact", point.random_over_exact);
    put("majority_over_random", point.majority_over_random);
    put("beta_hat", point.beta_hat);
    put("maxcut_concentration", point.maxcut_concentration);
    put("total_offdiag_cv", point.total_offdiag_cv);
    put("majority_cv", point.majority_cv);
    put("termination_fraction", point.termination_fraction);
    put("label_disjoint_fraction", point.label_disjoint_fraction);
    entry["ratios"] = std::move(ratios);
    grid.push_back(std::move(entry));
  }
  doc["grid"] = std::move(grid);
  return doc.dump(2);
}

}  // namespace wrig
