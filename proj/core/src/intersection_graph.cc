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

#include "wrig/intersection_graph.h"

#include <algorithm>

namespace wrig {

WeightedIntersectionGraph BuildGraph(const RepresentationMatrix& matrix) {
  const Vertex n = matrix.vertex_count();
  WeightedIntersectionGraph graph;
  graph.vertex_count = n;

  std::vector<Weight> shared(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u) {
    for (Label l : matrix.vertex_set(u)) {
      const auto members = matrix.label_set(l);
      // Members are sorted, so skip straight past u.
      for (auto it = std::upper_bound(members.begin(), members.end(), u);
           it != members.end(); ++it) {
        if (shared[*it]++ == 0) touched.push_back(*it);
      }
    }
    std::sort(touched.begin(), touched.end());
    for (Vertex v : touched) {
      graph.edges.push_back({u, v, shared[v]});
      graph.total_offdiag += 2 * shared[v];
      shared[v] = 0;
    }
    touched.clear();
  }
  return graph;
}

}  // namespace wrig
