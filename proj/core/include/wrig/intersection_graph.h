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

#ifndef WRIG_INTERSECTION_GRAPH_H_
#define WRIG_INTERSECTION_GRAPH_H_

#include <vector>

#include "wrig/representation_matrix.h"

namespace wrig {

struct WeightedEdge {
  Vertex u;  // u < v
  Vertex v;
  Weight weight;  // |S_u ∩ S_v| >= 1

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// The simple weighted graph with W = off-diagonal part of R^T R. Pairs with
// no shared label are absent. The diagonal |S_v| is not stored here; it
// cancels in every cut weight and is recoverable from the matrix.
struct WeightedIntersectionGraph {
  Vertex vertex_count = 0;
  std::vector<WeightedEdge> edges;  // sorted by (u, v)
  Weight total_offdiag = 0;         // sum_{i != j} [R^T R]_{ij} = 2 sum w
};

// Deterministic; cost is O(sum_l |L_l|^2).
WeightedIntersectionGraph BuildGraph(const RepresentationMatrix& matrix);

}  // namespace wrig

#endif  // WRIG_INTERSECTION_GRAPH_H_
