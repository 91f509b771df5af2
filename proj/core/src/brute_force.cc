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

#include "wrig/brute_force.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wrig/evaluation.h"

namespace wrig {
namespace {

void CheckCap(Vertex n, Vertex cap) {
  if (n > cap || n > 62) {
    throw std::invalid_argument("brute force limited to " +
                                std::to_string(cap) + " vertices, got " +
                                std::to_string(n));
  }
}

// Walks every coloring with x_0 = +1 in Gray-code order. The visitor sees the
// flipped vertex, the new color, and a key whose numeric order equals the
// lexicographic order of colorings (vertex 0 is the most significant bit,
// bit set means +1).
template <typename OnFlip, typename OnVisit>
void EnumerateGray(Vertex n, OnFlip&& on_flip, OnVisit&& on_visit) {
  std::uint64_t key = (std::uint64_t{1} << n) - 1;  // all +1
  on_visit(key);
  const std::uint64_t states = std::uint64_t{1} << (n - 1);
  for (std::uint64_t g = 1; g < states; ++g) {
    const Vertex v = 1 + std::countr_zero(g);
    const std::uint64_t bit = std::uint64_t{1} << (n - 1 - v);
    key ^= bit;
    on_flip(v, (key & bit) != 0 ? 1 : -1);
    on_visit(key);
  }
}

Coloring ColoringFromKey(Vertex n, std::uint64_t key) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    values[v] = ((key >> (n - 1 - v)) & 1) != 0 ? 1 : -1;
  }
  return Coloring(values);
}

}  // namespace

CutResult BruteForceMaxCut(const RepresentationMatrix& matrix,
                           Vertex max_vertices) {
  const Vertex n = matrix.vertex_count();
  CheckCap(n, max_vertices);

  std::vector<Weight> row_sums(static_cast<std::size_t>(matrix.label_count()));
  Weight norm = 0;
  for (Label l = 0; l < matrix.label_count(); ++l) {
    row_sums[l] = matrix.label_size(l);
    norm += row_sums[l] * row_sums[l];
  }

  Weight best_norm = norm;
  std::uint64_t best_key = ~std::uint64_t{0};
  EnumerateGray(
      n,
      [&](Vertex v, int color) {
        const Weight delta = 2 * color;
        for (Label l : matrix.vertex_set(v)) {
          const Weight before = row_sums[l];
          row_sums[l] += delta;
          norm += row_sums[l] * row_sums[l] - before * before;
        }
      },
      [&](std::uint64_t key) {
        if (norm < best_norm || (norm == best_norm && key < best_key)) {
          best_norm = norm;
          best_key = key;
        }
      });

  CutResult result;
  result.coloring = ColoringFromKey(n, best_key);
  result.weight = (GramEntrySum(matrix) - best_norm) / 4;
  result.algorithm = CutAlgorithm::kExact;
  return result;
}

DiscrepancyResult BruteForceMinDiscrepancy(const RepresentationMatrix& matrix,
                                           Vertex max_vertices) {
  const Vertex n = matrix.vertex_count();
  CheckCap(n, max_vertices);

  // histogram[a] = number of labels with |row sum| == a.
  const auto cap = static_cast<std::size_t>(matrix.max_label_size());
  std::vector<std::int64_t> histogram(cap + 1, 0);
  std::vector<Weight> row_sums(static_cast<std::size_t>(matrix.label_count()));
  Weight current_max = 0;
  for (Label l = 0; l < matrix.label_count(); ++l) {
    row_sums[l] = matrix.label_size(l);
    ++histogram[static_cast<std::size_t>(row_sums[l])];
    current_max = std::max(current_max, row_sums[l]);
  }

  Weight best = current_max;
  std::uint64_t best_key = ~std::uint64_t{0};
  EnumerateGray(
      n,
      [&](Vertex v, int color) {
        for (Label l : matrix.vertex_set(v)) {
          const Weight before = row_sums[l] < 0 ? -row_sums[l] : row_sums[l];
          row_sums[l] += 2 * color;
          const Weight after = row_sums[l] < 0 ? -row_sums[l] : row_sums[l];
          --histogram[static_cast<std::size_t>(before)];
          ++histogram[static_cast<std::size_t>(after)];
          if (after > current_max) current_max = after;
        }
        while (current_max > 0 &&
               histogram[static_cast<std::size_t>(current_max)] == 0) {
          --current_max;
        }
      },
      [&](std::uint64_t key) {
        if (current_max < best || (current_max == best && key < best_key)) {
          best = current_max;
          best_key = key;
        }
      });

  return {ColoringFromKey(n, best_key), best};
}

}  // namespace wrig
