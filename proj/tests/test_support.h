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

// Instance builders and independent reference evaluators for the tests.
// Nothing here calls into the library's evaluators.

#ifndef WRIG_TESTS_TEST_SUPPORT_H_
#define WRIG_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <vector>

#include "wrig/random.h"
#include "wrig/representation_matrix.h"

namespace wrig::testing {

// Label sets written with 1-based vertices, as in hand examples.
inline RepresentationMatrix FromOneBased(
    Vertex n, std::initializer_list<std::initializer_list<Vertex>> sets) {
  std::vector<std::vector<Vertex>> zero_based;
  for (const auto& set : sets) {
    std::vector<Vertex> members;
    for (Vertex v : set) members.push_back(v - 1);
    zero_based.push_back(members);
  }
  return RepresentationMatrix(static_cast<Label>(zero_based.size()), n,
                              zero_based);
}

inline Coloring Colors(std::initializer_list<int> values) {
  return Coloring(std::vector<int>(values));
}

// Bernoulli(p) matrix drawn entry by entry in row-major order.
inline RepresentationMatrix RandomMatrix(Rng& rng, Vertex n, Label m,
                                         double p) {
  std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(m));
  for (auto& set : sets) {
    for (Vertex v = 0; v < n; ++v) {
      if (rng.Uniform01() < p) set.push_back(v);
    }
  }
  return RepresentationMatrix(m, n, sets);
}

inline Coloring RandomColoring(Rng& rng, Vertex n) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (auto& x : values) x = (rng() & 1) != 0 ? 1 : -1;
  return Coloring(values);
}

// Coloring whose vertex v is +1 iff bit v of mask is set.
inline Coloring ColoringFromMask(Vertex n, std::uint64_t mask) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) values[v] = ((mask >> v) & 1) != 0 ? 1 : -1;
  return Coloring(values);
}

// Dense R as an m x n 0/1 table.
inline std::vector<std::vector<int>> Dense(const RepresentationMatrix& r) {
  std::vector<std::vector<int>> dense(
      static_cast<std::size_t>(r.label_count()),
      std::vector<int>(static_cast<std::size_t>(r.vertex_count()), 0));
  for (Label l = 0; l < r.label_count(); ++l) {
    for (Vertex v : r.label_set(l)) dense[l][v] = 1;
  }
  return dense;
}

// R^T R by the triple loop.
inline std::vector<std::vector<std::int64_t>> Gram(
    const RepresentationMatrix& r) {
  const auto dense = Dense(r);
  const auto n = static_cast<std::size_t>(r.vertex_count());
  std::vector<std::vector<std::int64_t>> gram(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& row : dense) gram[i][j] += row[i] * row[j];
    }
  }
  return gram;
}

inline std::int64_t GramSum(const RepresentationMatrix& r) {
  std::int64_t total = 0;
  for (const auto& row : Gram(r)) {
    for (auto entry : row) total += entry;
  }
  return total;
}

inline std::int64_t OffDiagonalSum(const RepresentationMatrix& r) {
  const auto gram = Gram(r);
  std::int64_t total = 0;
  for (std::size_t i = 0; i < gram.size(); ++i) {
    for (std::size_t j = 0; j < gram.size(); ++j) {
      if (i != j) total += gram[i][j];
    }
  }
  return total;
}

// Sum over unordered pairs split by x of [R^T R]_{ij}.
inline std::int64_t NaiveCut(const RepresentationMatrix& r, const Coloring& x) {
  const auto gram = Gram(r);
  std::int64_t total = 0;
  for (Vertex i = 0; i < r.vertex_count(); ++i) {
    for (Vertex j = i + 1; j < r.vertex_count(); ++j) {
      if (x[i] != x[j]) total += gram[i][j];
    }
  }
  return total;
}

inline std::int64_t NaiveNormSquared(const RepresentationMatrix& r,
                                     const Coloring& x) {
  std::int64_t total = 0;
  for (const auto& row : Dense(r)) {
    std::int64_t sum = 0;
    for (std::size_t v = 0; v < row.size(); ++v) sum += row[v] * x[static_cast<Vertex>(v)];
    total += sum * sum;
  }
  return total;
}

inline std::int64_t NaiveDiscrepancy(const RepresentationMatrix& r,
                                     const Coloring& x) {
  std::int64_t worst = 0;
  for (const auto& row : Dense(r)) {
    std::int64_t sum = 0;
    for (std::size_t v = 0; v < row.size(); ++v) sum += row[v] * x[static_cast<Vertex>(v)];
    worst = std::max(worst, std::abs(sum));
  }
  return worst;
}

// Closed sequences of length k with distinct vertices and labels, counted
// over all ordered tuples and divided by the k rotations.
inline std::uint64_t NaiveSequenceCount(const RepresentationMatrix& r, int k) {
  const auto dense = Dense(r);
  const int n = r.vertex_count();
  const int m = r.label_count();
  if (k > n || k > m) return 0;
  std::uint64_t ordered = 0;
  std::vector<int> vs(static_cast<std::size_t>(k));
  std::vector<int> ls(static_cast<std::size_t>(k));
  auto distinct = [](const std::vector<int>& xs) {
    return std::set<int>(xs.begin(), xs.end()).size() == xs.size();
  };
  std::uint64_t vertex_tuples = 1;
  std::uint64_t label_tuples = 1;
  for (int i = 0; i < k; ++i) {
    vertex_tuples *= static_cast<std::uint64_t>(n);
    label_tuples *= static_cast<std::uint64_t>(m);
  }
  for (std::uint64_t a = 0; a < vertex_tuples; ++a) {
    std::uint64_t code = a;
    for (auto& v : vs) {
      v = static_cast<int>(code % static_cast<std::uint64_t>(n));
      code /= static_cast<std::uint64_t>(n);
    }
    if (!distinct(vs)) continue;
    for (std::uint64_t b = 0; b < label_tuples; ++b) {
      code = b;
      for (auto& l : ls) {
        l = static_cast<int>(code % static_cast<std::uint64_t>(m));
        code /= static_cast<std::uint64_t>(m);
      }
      if (!distinct(ls)) continue;
      bool closed = true;
      for (int i = 0; i < k && closed; ++i) {
        const int next = vs[static_cast<std::size_t>((i + 1) % k)];
        closed = dense[ls[i]][vs[i]] == 1 && dense[ls[i]][next] == 1;
      }
      if (closed) ++ordered;
    }
  }
  return ordered / static_cast<std::uint64_t>(k);
}

}  // namespace wrig::testing

#endif  // WRIG_TESTS_TEST_SUPPORT_H_
