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

#ifndef WRIG_BRUTE_FORCE_H_
#define WRIG_BRUTE_FORCE_H_

#include "wrig/cut_algorithms.h"
#include "wrig/representation_matrix.h"

namespace wrig {

inline constexpr Vertex kDefaultBruteForceCap = 24;

struct DiscrepancyResult {
  Coloring coloring;
  Weight discrepancy = 0;
};

// Exact max cut by minimizing ||Rx||^2 over all x with x_0 = +1, visiting
// the 2^(n-1) colorings in Gray-code order so each step flips one vertex and
// updates |S_v| row sums. Among optimal colorings with x_0 = +1 the
// lexicographically smallest (-1 < +1) is returned. Throws
// std::invalid_argument when n exceeds max_vertices.
CutResult BruteForceMaxCut(const RepresentationMatrix& matrix,
                           Vertex max_vertices = kDefaultBruteForceCap);

// Exact disc(Sigma) = min_x ||Rx||_inf with the same enumeration and
// tie-break.
DiscrepancyResult BruteForceMinDiscrepancy(
    const RepresentationMatrix& matrix,
    Vertex max_vertices = kDefaultBruteForceCap);

}  // namespace wrig

#endif  // WRIG_BRUTE_FORCE_H_
