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

#ifndef WRIG_BIPARTIZATION_H_
#define WRIG_BIPARTIZATION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wrig/random.h"
#include "wrig/representation_matrix.h"

namespace wrig {

struct VertexPair {
  Vertex a;  // a < b
  Vertex b;

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// An edge of the skeleton multigraph, tagged with the label whose matching
// produced it.
struct SkeletonEdge {
  Vertex u;  // u < v
  Vertex v;
  Label label;

  friend auto operator<=>(const SkeletonEdge&, const SkeletonEdge&) = default;
};

// Closed vertex-label sequence v_1, l_1, v_2, ..., v_k, l_k, v_1 with
// {v_i, v_{i+1}} a subset of L_{l_i} (indices cyclic). Kept in canonical
// form: rotated so that the smallest vertex comes first, direction as found,
// so a cycle and its reflection are distinct objects.
struct VertexLabelSequence {
  std::vector<Vertex> vertices;
  std::vector<Label> labels;  // labels[i] joins vertices[i], vertices[i + 1]
  int strength = 0;           // number of i with |L_{l_i}| >= 3

  std::size_t size() const { return labels.size(); }

  // Rotates into canonical form and computes the strength.
  static VertexLabelSequence Make(std::vector<Vertex> vertices,
                                  std::vector<Label> labels,
                                  const RepresentationMatrix& matrix);

  friend bool operator==(const VertexLabelSequence&,
                         const VertexLabelSequence&) = default;
};

// True when the sequence is closed over the matrix: equal lengths, indices
// in range, and each consecutive vertex pair contained in its label's set.
bool IsClosedSequence(const RepresentationMatrix& matrix,
                      const VertexLabelSequence& sequence);

// Uniform shuffle of the members, paired consecutively: floor(|L|/2)
// disjoint pairs, a maximal matching of the clique on L.
std::vector<VertexPair> RandomMaximalMatching(std::span<const Vertex> members,
                                              Rng& rng);

// Working state of weak bipartization: one maximal matching per label (their
// multiset union is the skeleton G^(b)) plus the detection bookkeeping of
// excluded weak edges, one per recorded 0-strong odd cycle.
class BipartizationState {
 public:
  // Starts with empty matchings; call SetMatching or Rematch per label.
  explicit BipartizationState(RepresentationMatrix matrix);

  const RepresentationMatrix& matrix() const { return matrix_; }

  std::span<const VertexPair> matching(Label l) const { return matchings_[l]; }

  // Throws std::invalid_argument unless pairs is a maximal matching of the
  // clique on L_l.
  void SetMatching(Label l, std::vector<VertexPair> pairs);
  void Rematch(Label l, Rng& rng);

  // All skeleton edges, sorted.
  std::vector<SkeletonEdge> Skeleton() const;

  // Excluded edges belong to weak labels, so a label identifies its edge.
  std::span<const SkeletonEdge> excluded() const { return excluded_; }
  bool IsExcluded(Label l) const { return excluded_label_[l] != 0; }

  std::span<const VertexLabelSequence> zero_strong_cycles() const {
    return zero_strong_cycles_;
  }
  // False once two recorded 0-strong cycles share a label.
  bool label_disjoint() const { return label_disjoint_; }

  // Records a 0-strong cycle and excludes the edge of its smallest label.
  void RecordZeroStrongCycle(VertexLabelSequence cycle);
  void ResetDetection();

 private:
  RepresentationMatrix matrix_;
  std::vector<std::vector<VertexPair>> matchings_;
  std::vector<SkeletonEdge> excluded_;
  std::vector<char> excluded_label_;
  std::vector<char> recorded_label_;
  std::vector<VertexLabelSequence> zero_strong_cycles_;
  bool label_disjoint_ = true;
};

// Searches skeleton minus excluded edges for a shortest odd cycle. A cycle
// whose labels are all weak is recorded in the state (one of its edges gets
// excluded) and the search continues; the first cycle with a strong label is
// returned. Returns nullopt once the remaining graph is bipartite.
//
// Where a vertex pair carries several skeleton edges, the cycle uses the
// smallest strong label on it if there is one, else the smallest weak label.
std::optional<VertexLabelSequence> FindCoddMember(BipartizationState& state);

struct BipartizationOutcome {
  bool terminated = false;
  std::int64_t iterations = 0;  // re-matchings performed
  BipartizationState state;
  std::vector<VertexLabelSequence> zero_strong_cycles{};
  bool label_disjoint = true;
  // Number of times the detector returned a cycle with a strong label.
  std::int64_t codd_encounters = 0;
};

// max(1000, 10 n ceil(log2(n + 2))).
std::int64_t DefaultMaxRematch(Vertex n);

// Weak bipartization: draw a random maximal matching for every label, then
// while the detector finds an odd cycle with a strong label, redraw the
// matching of the smallest-index strong label on it. Detection bookkeeping
// is rebuilt from scratch before every search. Gives up after max_rematch
// re-matchings with terminated = false. max_rematch <= 0 selects
// DefaultMaxRematch.
BipartizationOutcome WeakBipartization(const RepresentationMatrix& matrix,
                                       Seed seed,
                                       std::int64_t max_rematch = 0);

// 2-colors H = skeleton minus excluded edges by BFS parity per connected
// component, starting from the component's smallest vertex (+1 on even
// layers). Isolated vertices get +1. Throws std::invalid_argument for a
// non-terminated outcome.
Coloring ExtractColoring(const BipartizationOutcome& outcome);

}  // namespace wrig

#endif  // WRIG_BIPARTIZATION_H_
