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

#ifndef WRIG_CUT_ALGORITHMS_H_
#define WRIG_CUT_ALGORITHMS_H_

#include <string_view>
#include <vector>

#include "wrig/random.h"
#include "wrig/representation_matrix.h"

namespace wrig {

enum class CutAlgorithm {
  kRandom,
  kMajority,
  kExact,
  kMinDiscrepancy,
  kBipartization,
};

std::string_view CutAlgorithmName(CutAlgorithm algorithm);

struct CutResult {
  Coloring coloring;
  Weight weight = 0;  // == CutWeight(matrix, coloring)
  CutAlgorithm algorithm = CutAlgorithm::kRandom;
  // Majority only: Z_t for every greedily colored vertex, in processing
  // order.
  std::vector<Weight> trace;
};

enum class VertexOrder {
  kNatural,   // v = 0, 1, ..., n - 1
  kShuffled,  // a permutation drawn from the seed
};

struct MajorityConfig {
  // Fraction of vertices (the first floor(epsilon * n) in processing order)
  // colored uniformly at random before the greedy phase. In [0, 1].
  double epsilon = 0.0;
  VertexOrder order = VertexOrder::kNatural;
  bool record_trace = false;

  void Validate() const;
};

// Each x_v independently +1 or -1 with probability 1/2.
CutResult RandomCut(const RepresentationMatrix& matrix, Seed seed);

// Majority Cut. After the random prefix, vertex t gets x_t = -1 when
//   Z_t = sum_{i colored before t} [R^T R]_{i,t} x_i >= 0
// and x_t = +1 otherwise (ties go to -1). Z_t is read off the running row
// sums of R x, so step t costs O(|S_t|).
CutResult MajorityCut(const RepresentationMatrix& matrix,
                      const MajorityConfig& config, Seed seed);

// sqrt(16 / (27 pi c^3)): the asymptotic lower bound on the relative gain of
// Majority Cut over a random cut at m = n, p = c / n, with the vanishing
// correction dropped. Throws std::invalid_argument for c <= 0.
double BetaLowerBound(double c);

}  // namespace wrig

#endif  // WRIG_CUT_ALGORITHMS_H_
