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

#include "wrig/sequence_count.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace wrig {
namespace {

double LogFalling(std::int64_t n, int k) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0);
}

class SequenceCounter {
 public:
  SequenceCounter(const RepresentationMatrix& matrix, int k)
      : matrix_(matrix), k_(k) {}

  std::uint64_t CountOrdered() {
    std::uint64_t total = 0;
    for (Vertex v = 0; v < matrix_.vertex_count(); ++v) {
      path_.assign(1, v);
      total += ExtendPath();
    }
    return total;
  }

 private:
  // Extends the vertex tuple until it has k entries, pruning pairs that share
  // no label.
  std::uint64_t ExtendPath() {
    if (static_cast<int>(path_.size()) == k_) {
      if (Shared(path_.back(), path_.front()).empty()) return 0;
      return CountLabelings();
    }
    std::uint64_t total = 0;
    for (Vertex w = 0; w < matrix_.vertex_count(); ++w) {
      if (std::find(path_.begin(), path_.end(), w) != path_.end()) continue;
      if (Shared(path_.back(), w).empty()) continue;
      path_.push_back(w);
      total += ExtendPath();
      path_.pop_back();
    }
    return total;
  }

  std::vector<Label> Shared(Vertex a, Vertex b) const {
    const auto sa = matrix_.vertex_set(a);
    const auto sb = matrix_.vertex_set(b);
    std::vector<Label> common;
    std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                          std::back_inserter(common));
    return common;
  }

  // Number of ways to give each cyclic edge of the tuple a distinct label
  // drawn from the labels both endpoints chose.
  std::uint64_t CountLabelings() {
    candidates_.clear();
    for (int i = 0; i < k_; ++i) {
      candidates_.push_back(Shared(path_[i], path_[(i + 1) % k_]));
    }
    chosen_.clear();
    return AssignLabel(0);
  }

  std::uint64_t AssignLabel(int i) {
    if (i == k_) return 1;
    std::uint64_t total = 0;
    for (Label l : candidates_[i]) {
      if (std::find(chosen_.begin(), chosen_.end(), l) != chosen_.end()) {
        continue;
      }
      chosen_.push_back(l);
      total += AssignLabel(i + 1);
      chosen_.pop_back();
    }
    return total;
  }

  const RepresentationMatrix& matrix_;
  const int k_;
  std::vector<Vertex> path_;
  std::vector<std::vector<Label>> candidates_;
  std::vector<Label> chosen_;
};

}  // namespace

double ExpectedSequenceCount(std::int64_t n, std::int64_t m, double p, int k) {
  if (k < 1 || k > n || k > m) {
    throw std::invalid_argument("k must satisfy 1 <= k <= min(n, m)");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
  if (p == 0.0) return 0.0;
  const double log_value =
      LogFalling(n, k) + LogFalling(m, k) + 2.0 * k * std::log(p);
  return std::exp(log_value) / k;
}

std::uint64_t CountSequencesExact(const RepresentationMatrix& matrix, int k,
                                  const SequenceCountLimits& limits) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > limits.max_k) {
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " exceeds the limit " +
                                std::to_string(limits.max_k));
  }
  if (matrix.vertex_count() > limits.max_vertices) {
    throw std::invalid_argument("exact sequence counting limited to " +
                                std::to_string(limits.max_vertices) +
                                " vertices");
  }
  if (k > matrix.vertex_count() || k > matrix.label_count()) return 0;
  // Rotations of a sequence with distinct vertices are pairwise distinct as
  // ordered tuples, so every class has exactly k members.
  return SequenceCounter(matrix, k).CountOrdered() / static_cast<std::uint64_t>(k);
}

}  // namespace wrig
