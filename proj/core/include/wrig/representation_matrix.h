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

#ifndef WRIG_REPRESENTATION_MATRIX_H_
#define WRIG_REPRESENTATION_MATRIX_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace wrig {

// Indices are 0-based everywhere in the library; the text formats are the
// only place where 1-based indices appear.
using Vertex = std::int32_t;
using Label = std::int32_t;
// Edge weights, cut weights and squared norms. All exact evaluators work in
// 64-bit integers.
using Weight = std::int64_t;

// The m x n 0/1 matrix R of label choices, held sparsely in both directions:
// label_set(l) = L_l = {v : R[l][v] = 1} and vertex_set(v) = S_v =
// {l : R[l][v] = 1}. Both views are sorted and duplicate-free, and each is the
// transpose of the other. Immutable after construction.
class RepresentationMatrix {
 public:
  // Validates and builds the matrix from per-label vertex lists. Each list
  // must be sorted, duplicate-free and within [0, n). Throws
  // std::invalid_argument otherwise. m may be 0; n must be positive.
  RepresentationMatrix(Label m, Vertex n,
                       const std::vector<std::vector<Vertex>>& label_sets);

  // Builds from a label-major CSR layout without re-validating ordering;
  // used by the samplers, which emit sorted output by construction.
  static RepresentationMatrix FromSortedCsr(Label m, Vertex n,
                                            std::vector<std::int64_t> offsets,
                                            std::vector<Vertex> members);

  Label label_count() const { return m_; }
  Vertex vertex_count() const { return n_; }

  std::span<const Vertex> label_set(Label l) const {
    return {label_members_.data() + label_offsets_[l],
            label_members_.data() + label_offsets_[l + 1]};
  }
  std::span<const Label> vertex_set(Vertex v) const {
    return {vertex_members_.data() + vertex_offsets_[v],
            vertex_members_.data() + vertex_offsets_[v + 1]};
  }
  std::int64_t label_size(Label l) const {
    return label_offsets_[l + 1] - label_offsets_[l];
  }

  // Number of ones in R, i.e. sum of |L_l| (= sum of |S_v|).
  std::int64_t incidence_count() const {
    return static_cast<std::int64_t>(label_members_.size());
  }
  std::int64_t max_label_size() const;

  // A label is strong when |L_l| >= 3 and weak when |L_l| == 2.
  bool is_strong(Label l) const { return label_size(l) >= 3; }
  bool is_weak(Label l) const { return label_size(l) == 2; }

  bool contains(Label l, Vertex v) const;

  std::vector<std::vector<Vertex>> label_sets() const;

  friend bool operator==(const RepresentationMatrix&,
                         const RepresentationMatrix&) = default;

 private:
  RepresentationMatrix() = default;
  void BuildVertexView();

  Label m_ = 0;
  Vertex n_ = 0;
  std::vector<std::int64_t> label_offsets_;
  std::vector<Vertex> label_members_;
  std::vector<std::int64_t> vertex_offsets_;
  std::vector<Label> vertex_members_;
};

// The set system Sigma = {L_1, ..., L_m} whose incidence matrix is R. A
// read-only alias: discrepancy is phrased over sets, cut weight over R.
class SetSystemView {
 public:
  explicit SetSystemView(const RepresentationMatrix& matrix)
      : matrix_(&matrix) {}

  Label set_count() const { return matrix_->label_count(); }
  Vertex ground_size() const { return matrix_->vertex_count(); }
  std::span<const Vertex> set(Label l) const { return matrix_->label_set(l); }
  const RepresentationMatrix& incidence() const { return *matrix_; }

 private:
  const RepresentationMatrix* matrix_;
};

// A 2-coloring x in {-1, +1}^n; x_v = +1 puts v on side A, -1 on side B.
class Coloring {
 public:
  Coloring() = default;
  // Throws std::invalid_argument if any entry is not +1 or -1.
  explicit Coloring(std::span<const int> values);
  explicit Coloring(const std::vector<int>& values)
      : Coloring(std::span<const int>(values)) {}

  static Coloring AllPlus(Vertex n);

  Vertex size() const { return static_cast<Vertex>(values_.size()); }
  int operator[](Vertex v) const { return values_[v]; }
  void set(Vertex v, int value);
  void flip(Vertex v) { values_[v] = static_cast<std::int8_t>(-values_[v]); }

  Coloring Negated() const;
  std::span<const std::int8_t> values() const { return values_; }
  std::vector<int> ToVector() const { return {values_.begin(), values_.end()}; }

  // Lexicographic over values with -1 < +1.
  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::int8_t> values_;
};

}  // namespace wrig

#endif  // WRIG_REPRESENTATION_MATRIX_H_
