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

#include "wrig/cut_algorithms.h"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "wrig/evaluation.h"

namespace wrig {

std::string_view CutAlgorithmName(CutAlgorithm algorithm) {
  switch (algorithm) {
    case CutAlgorithm::kRandom:
      return "random";
    case CutAlgorithm::kMajority:
      return "majority";
    case CutAlgorithm::kExact:
      return "exact";
    case CutAlgorithm::kMinDiscrepancy:
      return "mindisc";
    case CutAlgorithm::kBipartization:
      return "bipartize";
  }
  return "unknown";
}

void MajorityConfig::Validate() const {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon must lie in [0, 1]");
  }
}

CutResult RandomCut(const RepresentationMatrix& matrix, Seed seed) {
  Rng rng(seed);
  const Vertex n = matrix.vertex_count();
  std::vector<int> values(static_cast<std::size_t>(n));
  for (auto& value : values) value = rng.Sign();
  CutResult result;
  result.coloring = Coloring(values);
  result.weight = CutWeight(matrix, result.coloring);
  result.algorithm = CutAlgorithm::kRandom;
  return result;
}

CutResult MajorityCut(const RepresentationMatrix& matrix,
                      const MajorityConfig& config, Seed seed) {
  config.Validate();
  const Vertex n = matrix.vertex_count();
  Rng order_rng(DeriveSeed(seed, 0));
  Rng coin_rng(DeriveSeed(seed, 1));

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (config.order == VertexOrder::kShuffled) {
    order_rng.Shuffle(std::span<Vertex>(order));
  }

  const auto prefix = static_cast<Vertex>(
      std::floor(config.epsilon * static_cast<double>(n)));
  std::vector<Weight> row_sums(static_cast<std::size_t>(matrix.label_count()),
                               0);
  std::vector<int> values(static_cast<std::size_t>(n), 0);

  CutResult result;
  result.algorithm = CutAlgorithm::kMajority;
  if (config.record_trace) result.trace.reserve(static_cast<std::size_t>(n - prefix));

  for (Vertex step = 0; step < n; ++step) {
    const Vertex t = order[step];
    int color;
    if (step < prefix) {
      color = coin_rng.Sign();
    } else {
      Weight z = 0;
      for (Label l : matrix.vertex_set(t)) z += row_sums[l];
      color = z >= 0 ? -1 : 1;
      if (config.record_trace) result.trace.push_back(z);
    }
    values[t] = color;
    for (Label l : matrix.vertex_set(t)) row_sums[l] += color;
  }

  Weight norm = 0;
  for (Weight s : row_sums) norm += s * s;
  result.coloring = Coloring(values);
  result.weight = (GramEntrySum(matrix) - norm) / 4;
  return result;
}

double BetaLowerBound(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("c must be positive");
  return std::sqrt(16.0 / (27.0 * std::numbers::pi * c * c * c));
}

}  // namespace wrig
