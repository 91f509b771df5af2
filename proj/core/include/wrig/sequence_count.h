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

#ifndef WRIG_SEQUENCE_COUNT_H_
#define WRIG_SEQUENCE_COUNT_H_

#include <cstdint>

#include "wrig/representation_matrix.h"

namespace wrig {

// E[C_k] = (1/k) * n!/(n-k)! * m!/(m-k)! * p^(2k), the expected number of
// closed vertex-label sequences of size k with distinct vertices and
// distinct labels. Evaluated through log-factorials. Throws
// std::invalid_argument unless 1 <= k <= min(n, m).
double ExpectedSequenceCount(std::int64_t n, std::int64_t m, double p, int k);

struct SequenceCountLimits {
  int max_k = 4;
  Vertex max_vertices = 12;
};

// Exact C_k on a concrete matrix: sequences v_1, l_1, ..., v_k, l_k with
// distinct vertices, distinct labels and {v_i, v_{i+1}} in L_{l_i}, counted
// up to rotation (reflections stay distinct). For k = 1 this is the number
// of incidences (v, l) with v in L_l. Returns 0 when k > n or k > m. Throws
// std::invalid_argument for k < 1 or when the limits are exceeded.
std::uint64_t CountSequencesExact(const RepresentationMatrix& matrix, int k,
                                  const SequenceCountLimits& limits = {});

}  // namespace wrig

#endif  // WRIG_SEQUENCE_COUNT_H_
