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

#include "wrig/representation_matrix.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace wrig {

RepresentationMatrix::RepresentationMatrix(
    Label m, Vertex n, const std::vector<std::vector<Vertex>>& label_sets)
    : m_(m), n_(n) {
  if (m < 0) throw std::invalid_argument("label count must be non-negative");
  if (n <= 0) throw std::invalid_argument("vertex count must be positive");
  if (label_sets.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("expected " + std::to_string(m) +
                                " label sets, got " +
                                std::to_string(label_sets.size()));
  }
  label_offsets_.reserve(static_cast<std::size_t>(m) + 1);
  label_offsets_.push_back(0);
  for (Label l = 0; l < m; ++l) {
    const auto& set = label_sets[l];
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i] < 0 || set[i] >= n) {
        throw std::invalid_argument("label " + std::to_string(l) +
                                    ": vertex " + std::to_string(set[i]) +
                                    " out of range");
      }
      if (i > 0 && set[i - 1] >= set[i]) {
        throw std::invalid_argument("label " + std::to_string(l) +
                                    ": vertices not strictly increasing");
      }
    }
    label_members_.insert(label_members_.end(), set.begin(), set.end());
    label_offsets_.push_back(static_cast<std::int64_t>(label_members_.size()));
  }
  BuildVertexView();
}

RepresentationMatrix RepresentationMatrix::FromSortedCsr(
    Label m, Vertex n, std::vector<std::int64_t> offsets,
    std::vector<Vertex> members) {
  if (m < 0 || n <= 0 || offsets.size() != static_cast<std::size_t>(m) + 1 ||
      offsets.front() != 0 ||
      offsets.back() != static_cast<std::int64_t>(members.size())) {
    throw std::invalid_argument("malformed CSR representation matrix");
  }
  RepresentationMatrix matrix;
  matrix.m_ = m;
  matrix.n_ = n;
  matrix.label_offsets_ = std::move(offsets);
  matrix.label_members_ = std::move(members);
  matrix.BuildVertexView();
  return matrix;
}

void RepresentationMatrix::BuildVertexView() {
  vertex_offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex v : label_members_) ++vertex_offsets_[v + 1];
  for (Vertex v = 0; v < n_; ++v) vertex_offsets_[v + 1] += vertex_offsets_[v];
  vertex_members_.resize(label_members_.size());
  std::vector<std::int64_t> cursor(vertex_offsets_.begin(),
                                   vertex_offsets_.end() - 1);
  // Labels are visited in increasing order, so each S_v comes out sorted.
  for (Label l = 0; l < m_; ++l) {
    for (Vertex v : label_set(l)) vertex_members_[cursor[v]++] = l;
  }
}

std::int64_t RepresentationMatrix::max_label_size() const {
  std::int64_t best = 0;
  for (Label l = 0; l < m_; ++l) best = std::max(best, label_size(l));
  return best;
}

bool RepresentationMatrix::contains(Label l, Vertex v) const {
  const auto set = label_set(l);
  return std::binary_search(set.begin(), set.end(), v);
}

std::vector<std::vector<Vertex>> RepresentationMatrix::label_sets() const {
  std::vector<std::vector<Vertex>> sets;
  sets.reserve(static_cast<std::size_t>(m_));
  for (Label l = 0; l < m_; ++l) {
    const auto set = label_set(l);
    sets.emplace_back(set.begin(), set.end());
  }
  return sets;
}

Coloring::Coloring(std::span<const int> values) {
  values_.reserve(values.size());
  for (int value : values) {
    if (value != 1 && value != -1) {
      throw std::invalid_argument("coloring entries must be +1 or -1, got " +
                                  std::to_string(value));
    }
    values_.push_back(static_cast<std::int8_t>(value));
  }
}

Coloring Coloring::AllPlus(Vertex n) {
  Coloring coloring;
  coloring.values_.assign(static_cast<std::size_t>(n), 1);
  return coloring;
}

void Coloring::set(Vertex v, int value) {
  if (value != 1 && value != -1) {
    throw std::invalid_argument("coloring entries must be +1 or -1");
  }
  values_[v] = static_cast<std::int8_t>(value);
}

Coloring Coloring::Negated() const {
  Coloring negated = *this;
  for (auto& value : negated.values_) value = static_cast<std::int8_t>(-value);
  return negated;
}

}  // namespace wrig
