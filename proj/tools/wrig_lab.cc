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

// Command-line front end: sample, solve, bipartize, count-sequences,
// experiment.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "wrig/bipartization.h"
#include "wrig/brute_force.h"
#include "wrig/cut_algorithms.h"
#include "wrig/evaluation.h"
#include "wrig/experiment.h"
#include "wrig/sampling.h"
#include "wrig/sequence_count.h"
#include "wrig/text_format.h"

namespace {

using Json = nlohmann::json;

enum ExitCode : int {
  kOk = 0,
  kInvalidInput = 1,
  kRuntimeFailure = 2,
  kNonTermination = 3,
};

struct SampleOptions {
  int n = 0;
  std::optional<int> m;
  std::optional<double> alpha;
  std::optional<double> c;
  std::optional<double> p;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveOptions {
  std::string algo = "majority";
  double epsilon = 0.0;
  bool shuffle = false;
  std::uint64_t seed = 0;
  std::string in;
  std::string coloring_out;
  bool json = false;
};

struct BipartizeOptions {
  std::string in;
  std::uint64_t seed = 0;
  std::int64_t max_rematch = 0;
  bool json = false;
  bool strict = false;
  std::string coloring_out;
};

struct CountOptions {
  std::string in;
  int k = 3;
  bool expect = false;
  std::int64_t n = 0;
  std::int64_t m = 0;
  double p = 0.0;
};

struct ExperimentOptions {
  std::string spec;
  bool strict = false;
  std::optional<int> workers;
  std::optional<std::string> csv;
  std::optional<std::string> summary;
};

wrig::RepresentationMatrix LoadMatrix(const std::string& path) {
  if (path.empty() || path == "-") return wrig::ReadMatrix(std::cin);
  if (!std::ifstream(path)) throw std::invalid_argument("cannot open " + path);
  return wrig::ReadMatrixFile(path);
}

void SaveColoring(const std::string& path, const wrig::Coloring& coloring) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  wrig::WriteColoring(out, coloring);
  if (!out) throw std::runtime_error("failed writing " + path);
}

int RunSample(const SampleOptions& opt) {
  wrig::ModelParams params;
  if (opt.c) {
    if (opt.p) throw std::invalid_argument("--c fixes p = c/n; drop --p");
    params = wrig::ModelParams::WithDensity(opt.n, *opt.c);
  } else {
    if (!opt.p) throw std::invalid_argument("--p is required with --m or --alpha");
    params = opt.alpha ? wrig::ModelParams::WithAlpha(opt.n, *opt.alpha, *opt.p)
                       : wrig::ModelParams::Fixed(opt.n, *opt.m, *opt.p);
  }
  if (!params.InStudiedRange()) {
    std::cerr << "warning: p outside [sqrt(1/(nm)), 1/sqrt(m)] for "
              << params.Describe() << '\n';
  }
  const auto matrix = wrig::SampleMatrix(params, opt.seed);
  if (opt.out.empty() || opt.out == "-") {
    wrig::WriteMatrix(std::cout, matrix);
    return kOk;
  }
  std::ofstream out(opt.out, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + opt.out);
  wrig::WriteMatrix(out, matrix);
  if (!out) throw std::runtime_error("failed writing " + opt.out);
  return kOk;
}

int RunSolve(const SolveOptions& opt) {
  const auto matrix = LoadMatrix(opt.in);
  wrig::Coloring coloring;
  wrig::Weight weight = 0;
  if (opt.algo == "random") {
    auto cut = wrig::RandomCut(matrix, opt.seed);
    coloring = std::move(cut.coloring);
    weight = cut.weight;
  } else if (opt.algo == "majority") {
    wrig::MajorityConfig config;
    config.epsilon = opt.epsilon;
    config.order = opt.shuffle ? wrig::VertexOrder::kShuffled
                               : wrig::VertexOrder::kNatural;
    auto cut = wrig::MajorityCut(matrix, config, opt.seed);
    coloring = std::move(cut.coloring);
    weight = cut.weight;
  } else if (opt.algo == "exact") {
    auto cut = wrig::BruteForceMaxCut(matrix);
    coloring = std::move(cut.coloring);
    weight = cut.weight;
  } else {
    auto result = wrig::BruteForceMinDiscrepancy(matrix);
    coloring = std::move(result.coloring);
    weight = wrig::CutWeight(matrix, coloring);
  }
  const wrig::Weight disc = wrig::Discrepancy(matrix, coloring);
  SaveColoring(opt.coloring_out, coloring);
  if (opt.json) {
    Json doc{{"algorithm", opt.algo},
             {"weight", weight},
             {"discrepancy", disc},
             {"n", matrix.vertex_count()},
             {"m", matrix.label_count()},
             {"seed", opt.seed}};
    std::cout << doc.dump() << '\n';
  } else {
    fmt::print("algorithm {}  n {}  m {}  weight {}  discrepancy {}\n", opt.algo,
               matrix.vertex_count(), matrix.label_count(), weight, disc);
  }
  return kOk;
}

int RunBipartize(const BipartizeOptions& opt) {
  const auto matrix = LoadMatrix(opt.in);
  const auto outcome = wrig::WeakBipartization(matrix, opt.seed, opt.max_rematch);
  std::optional<wrig::Weight> weight;
  std::optional<wrig::Weight> disc;
  if (outcome.terminated) {
    const wrig::Coloring coloring = wrig::ExtractColoring(outcome);
    weight = wrig::CutWeight(matrix, coloring);
    disc = wrig::Discrepancy(matrix, coloring);
    SaveColoring(opt.coloring_out, coloring);
  }
  if (opt.json) {
    Json doc{{"terminated", outcome.terminated},
             {"iterations", outcome.iterations},
             {"zero_strong_cycles", outcome.zero_strong_cycles.size()},
             {"label_disjoint", outcome.label_disjoint},
             {"cut_weight", weight ? Json(*weight) : Json(nullptr)},
             {"discrepancy", disc ? Json(*disc) : Json(nullptr)}};
    std::cout << doc.dump() << '\n';
  } else if (outcome.terminated) {
    fmt::print(
        "terminated after {} re-matchings  zero-strong cycles {}  "
        "label-disjoint {}  weight {}  discrepancy {}\n",
        outcome.iterations, outcome.zero_strong_cycles.size(),
        outcome.label_disjoint, *weight, *disc);
  } else {
    fmt::print("gave up after {} re-matchings\n", outcome.iterations);
  }
  if (!outcome.terminated) {
    std::cerr << "warning: weak bipartization did not terminate\n";
    if (opt.strict) return kNonTermination;
  }
  return kOk;
}

int RunCount(const CountOptions& opt) {
  if (opt.expect) {
    fmt::print("{:.17g}\n", wrig::ExpectedSequenceCount(opt.n, opt.m, opt.p, opt.k));
    return kOk;
  }
  const auto matrix = LoadMatrix(opt.in);
  fmt::print("{}\n", wrig::CountSequencesExact(matrix, opt.k));
  return kOk;
}

int RunExperimentCommand(const ExperimentOptions& opt) {
  auto spec = wrig::ExperimentSpec::FromFile(opt.spec);
  if (opt.workers) spec.workers = *opt.workers;
  if (opt.csv) spec.csv_path = *opt.csv;
  if (opt.summary) spec.summary_path = *opt.summary;
  spec.Validate();
  const auto result = wrig::RunExperiment(spec);
  std::cerr << fmt::format("{} trials, {} audited, {} non-terminated\n",
                           result.records.size(), result.audited,
                           result.nonterminated);
  if (spec.csv_path.empty() && spec.summary_path.empty()) {
    std::cout << wrig::SummaryToJson(spec, result.summary) << '\n';
  }
  if (result.nonterminated > 0 && opt.strict) return kNonTermination;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-cut and discrepancy experiments on weighted random "
               "intersection graphs"};
  app.require_subcommand(1);

  SampleOptions sample;
  auto* sample_cmd = app.add_subcommand("sample", "Draw a representation matrix");
  sample_cmd->add_option("--n", sample.n, "Vertices")->required()->check(CLI::PositiveNumber);
  auto* m_opt = sample_cmd->add_option("--m", sample.m, "Labels");
  auto* alpha_opt = sample_cmd->add_option("--alpha", sample.alpha, "m = floor(n^alpha)");
  auto* c_opt = sample_cmd->add_option("--c", sample.c, "m = n, p = c/n");
  m_opt->excludes(alpha_opt)->excludes(c_opt);
  alpha_opt->excludes(c_opt);
  sample_cmd->add_option("--p", sample.p, "Edge probability");
  sample_cmd->add_option("--seed", sample.seed, "Seed");
  sample_cmd->add_option("--out", sample.out, "Output file (stdout if omitted)");
  sample_cmd->callback([&] {
    if (!sample.m && !sample.alpha && !sample.c) {
      throw CLI::ValidationError("one of --m, --alpha, --c is required");
    }
  });

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a cut algorithm on a matrix");
  solve_cmd->add_option("--algo", solve.algo, "Algorithm")
      ->check(CLI::IsMember({"random", "majority", "exact", "mindisc"}));
  solve_cmd->add_option("--epsilon", solve.epsilon, "Random prefix fraction")
      ->check(CLI::Range(0.0, 1.0));
  solve_cmd->add_flag("--shuffle", solve.shuffle, "Process vertices in random order");
  solve_cmd->add_option("--seed", solve.seed, "Seed");
  solve_cmd->add_option("--in", solve.in, "Matrix file (stdin if omitted)");
  solve_cmd->add_option("--coloring-out", solve.coloring_out, "Write the coloring here");
  solve_cmd->add_flag("--json", solve.json, "JSON output");

  BipartizeOptions bip;
  auto* bip_cmd = app.add_subcommand("bipartize", "Run weak bipartization");
  bip_cmd->add_option("--in", bip.in, "Matrix file (stdin if omitted)");
  bip_cmd->add_option("--seed", bip.seed, "Seed");
  bip_cmd->add_option("--max-rematch", bip.max_rematch, "Re-matching budget (0: default)");
  bip_cmd->add_flag("--json", bip.json, "JSON output");
  bip_cmd->add_flag("--strict", bip.strict, "Exit 3 on non-termination");
  bip_cmd->add_option("--coloring-out", bip.coloring_out, "Write the coloring here");

  CountOptions count;
  auto* count_cmd = app.add_subcommand(
      "count-sequences", "Count closed vertex-label sequences of length k");
  count_cmd->add_option("--in", count.in, "Matrix file (stdin if omitted)");
  count_cmd->add_option("--k", count.k, "Sequence length")->check(CLI::PositiveNumber);
  auto* expect_flag =
      count_cmd->add_flag("--expect", count.expect, "Print the expected count instead");
  count_cmd->add_option("--n", count.n, "Vertices")->needs(expect_flag);
  count_cmd->add_option("--m", count.m, "Labels")->needs(expect_flag);
  count_cmd->add_option("--p", count.p, "Edge probability")->needs(expect_flag);

  ExperimentOptions exp;
  auto* exp_cmd = app.add_subcommand("experiment", "Run an experiment spec");
  exp_cmd->add_option("--spec", exp.spec, "JSON spec file")->required();
  exp_cmd->add_flag("--strict", exp.strict, "Exit 3 if any run did not terminate");
  exp_cmd->add_option("--workers", exp.workers, "Override the worker count");
  exp_cmd->add_option("--csv", exp.csv, "Override the CSV path");
  exp_cmd->add_option("--summary", exp.summary, "Override the summary path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (sample_cmd->parsed()) return RunSample(sample);
    if (solve_cmd->parsed()) return RunSolve(solve);
    if (bip_cmd->parsed()) return RunBipartize(bip);
    if (count_cmd->parsed()) return RunCount(count);
    if (exp_cmd->parsed()) return RunExperimentCommand(exp);
  } catch (const wrig::FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kRuntimeFailure;
}
