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

#include "wrig/evaluation.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wrig {
namespace {

void CheckLength(Vertex n, const Coloring& coloring) {
  if (coloring.size() != n) {
    throw std::invalid_argument("coloring has " +
                                std::to_string(coloring.size()) +
                                " entries, expected " + std::to_string(n));
  }
}

}  // namespace

Weight GramEntrySum(const RepresentationMatrix& matrix) {
  Weight total = 0;
  for (Label l = 0; l < matrix.label_count(); ++l) {
    total += matrix.label_size(l) * matrix.label_size(l);
  }
  return total;
}

Weight TotalOffDiagonal(const RepresentationMatrix& matrix) {
  return GramEntrySum(matrix) - matrix.incidence_count();
}

std::vector<Weight> RowSums(const RepresentationMatrix& matrix,
                            const Coloring& coloring) {
  CheckLength(matrix.vertex_count(), coloring);
  std::vector<Weight> sums(static_cast<std::size_t>(matrix.label_count()), 0);
  for (Label l = 0; l < matrix.label_count(); ++l) {
    for (Vertex v : matrix.label_set(l)) sums[l] += coloring[v];
  }
  return sums;
}

Weight NormSquared(const RepresentationMatrix& matrix,
                   const Coloring& coloring) {
  Weight total = 0;
  for (Weight s : RowSums(matrix, coloring)) total += s * s;
  return total;
}

Weight Discrepancy(const RepresentationMatrix& matrix,
                   const Coloring& coloring) {
  Weight worst = 0;
  for (Weight s : RowSums(matrix, coloring)) worst = std::max(worst, s < 0 ? -s : s);
  return worst;
}

Weight CutWeight(const RepresentationMatrix& matrix, const Coloring& coloring) {
  const Weight numerator = GramEntrySum(matrix) - NormSquared(matrix, coloring);
  // Each (Rx)_l has the parity of |L_l|, so the numerator is 4 * (cut).
  return numerator / 4;
}

Weight CutWeightDirect(const WeightedIntersectionGraph& graph,
                       const Coloring& coloring) {
  CheckLength(graph.vertex_count, coloring);
  Weight total = 0;
  for (const auto& edge : graph.edges) {
    if (coloring[edge.u] != coloring[edge.v]) total += edge.weight;
  }
  return total;
}

}  // namespace wrig
