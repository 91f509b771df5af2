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

#ifndef WRIG_EVALUATION_H_
#define WRIG_EVALUATION_H_

#include <vector>

#include "wrig/intersection_graph.h"
#include "wrig/representation_matrix.h"

namespace wrig {

// Exact integer evaluators. Every function taking a Coloring throws
// std::invalid_argument when its length differs from the vertex count.

// sum_{i,j} [R^T R]_{ij} including the diagonal, which equals sum_l |L_l|^2.
Weight GramEntrySum(const RepresentationMatrix& matrix);

// sum_{i != j} [R^T R]_{ij} = sum_l |L_l| (|L_l| - 1).
Weight TotalOffDiagonal(const RepresentationMatrix& matrix);

// (Rx)_l = sum_{v in L_l} x_v for every label.
std::vector<Weight> RowSums(const RepresentationMatrix& matrix,
                            const Coloring& coloring);

// ||Rx||^2.
Weight NormSquared(const RepresentationMatrix& matrix,
                   const Coloring& coloring);

// ||Rx||_inf = disc(Sigma, x); 0 when there are no labels.
Weight Discrepancy(const RepresentationMatrix& matrix,
                   const Coloring& coloring);

// Cut weight through the norm identity
//   Cut = (sum_{i,j} [R^T R]_{ij} - ||Rx||^2) / 4.
Weight CutWeight(const RepresentationMatrix& matrix, const Coloring& coloring);

// Cut weight as the sum of weights of edges whose endpoints differ in color.
// Must agree with CutWeight for every input.
Weight CutWeightDirect(const WeightedIntersectionGraph& graph,
                       const Coloring& coloring);

}  // namespace wrig

#endif  // WRIG_EVALUATION_H_
