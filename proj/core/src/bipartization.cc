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

#include "wrig/bipartization.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace wrig {
namespace {

// Simple undirected graph in CSR form; each adjacency entry carries the
// label that realizes the edge.
struct WorkingGraph {
  std::vector<std::int64_t> offsets;
  std::vector<Vertex> neighbors;
  std::vector<Label> labels;

  std::int64_t begin(Vertex v) const { return offsets[v]; }
  std::int64_t end(Vertex v) const { return offsets[v + 1]; }
};

// Builds a CSR adjacency from undirected tagged edges. With collapse set,
// parallel edges are merged into one whose label is the smallest strong
// label on the pair, or the smallest weak label when none is strong.
WorkingGraph BuildAdjacency(Vertex n, std::vector<SkeletonEdge> edges,
                            const RepresentationMatrix& matrix, bool collapse) {
  if (collapse) {
    std::sort(edges.begin(), edges.end(),
              [&](const SkeletonEdge& x, const SkeletonEdge& y) {
                if (x.u != y.u) return x.u < y.u;
                if (x.v != y.v) return x.v < y.v;
                const bool xs = matrix.is_strong(x.label);
                const bool ys = matrix.is_strong(y.label);
                if (xs != ys) return xs;
                return x.label < y.label;
              });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const SkeletonEdge& x, const SkeletonEdge& y) {
                              return x.u == y.u && x.v == y.v;
                            }),
                edges.end());
  }
  WorkingGraph graph;
  graph.offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : edges) {
    ++graph.offsets[e.u + 1];
    ++graph.offsets[e.v + 1];
  }
  for (Vertex v = 0; v < n; ++v) graph.offsets[v + 1] += graph.offsets[v];
  graph.neighbors.resize(edges.size() * 2);
  graph.labels.resize(edges.size() * 2);
  std::vector<std::int64_t> cursor(graph.offsets.begin(),
                                   graph.offsets.end() - 1);
  for (const auto& e : edges) {
    graph.neighbors[cursor[e.u]] = e.v;
    graph.labels[cursor[e.u]++] = e.label;
    graph.neighbors[cursor[e.v]] = e.u;
    graph.labels[cursor[e.v]++] = e.label;
  }
  return graph;
}

std::vector<SkeletonEdge> ActiveEdges(const BipartizationState& state) {
  std::vector<SkeletonEdge> edges = state.Skeleton();
  std::erase_if(edges, [&](const SkeletonEdge& e) {
    return state.IsExcluded(e.label);
  });
  return edges;
}

// Marks every vertex whose connected component is not bipartite.
std::vector<char> NonBipartiteComponents(const WorkingGraph& graph, Vertex n) {
  std::vector<int> side(static_cast<std::size_t>(n), 0);
  std::vector<int> component(static_cast<std::size_t>(n), -1);
  std::vector<char> bad_component;
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (component[root] >= 0) continue;
    const int id = static_cast<int>(bad_component.size());
    bad_component.push_back(0);
    queue.assign(1, root);
    component[root] = id;
    side[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (auto i = graph.begin(u); i < graph.end(u); ++i) {
        const Vertex w = graph.neighbors[i];
        if (component[w] < 0) {
          component[w] = id;
          side[w] = -side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          bad_component[id] = 1;
        }
      }
    }
  }
  std::vector<char> flagged(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) flagged[v] = bad_component[component[v]];
  return flagged;
}

struct OddCycle {
  std::vector<Vertex> vertices;
  std::vector<Label> labels;
};

// Shortest odd cycle over the flagged vertices: BFS from every source, where
// an edge inside one BFS layer d closes a cycle of length 2d + 1. Sources are
// tried in increasing order and only a strictly shorter cycle replaces the
// incumbent, so the result is deterministic.
std::optional<OddCycle> ShortestOddCycle(const WorkingGraph& graph, Vertex n,
                                         const std::vector<char>& flagged) {
  std::optional<OddCycle> best;
  std::int64_t best_length = std::numeric_limits<std::int64_t>::max();
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<Label> parent_label(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> queue;

  for (Vertex source = 0; source < n; ++source) {
    if (!flagged[source]) continue;
    queue.assign(1, source);
    dist[source] = 0;
    bool found = false;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
      const Vertex u = queue[head];
      if (2 * static_cast<std::int64_t>(dist[u]) + 1 >= best_length) break;
      for (auto i = graph.begin(u); i < graph.end(u); ++i) {
        const Vertex w = graph.neighbors[i];
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          parent_label[w] = graph.labels[i];
          queue.push_back(w);
        } else if (dist[w] == dist[u]) {
          // Walk both tree paths up to their meeting point.
          std::vector<Vertex> up_u{u};
          std::vector<Vertex> up_w{w};
          while (up_u.back() != up_w.back()) {
            up_u.push_back(parent[up_u.back()]);
            up_w.push_back(parent[up_w.back()]);
          }
          OddCycle cycle;
          const std::size_t depth = up_u.size() - 1;  // meeting point index
          for (std::size_t j = depth; j > 0; --j) {
            cycle.vertices.push_back(up_u[j]);
            cycle.labels.push_back(parent_label[up_u[j - 1]]);
          }
          cycle.vertices.push_back(u);
          cycle.labels.push_back(graph.labels[i]);
          for (std::size_t j = 0; j < depth; ++j) {
            cycle.vertices.push_back(up_w[j]);
            cycle.labels.push_back(parent_label[up_w[j]]);
          }
          best_length = static_cast<std::int64_t>(cycle.labels.size());
          best = std::move(cycle);
          found = true;
          break;
        }
      }
    }
    for (Vertex v : queue) {
      dist[v] = -1;
      parent[v] = -1;
      parent_label[v] = -1;
    }
    if (best_length == 3) break;
  }
  return best;
}

}  // namespace

VertexLabelSequence VertexLabelSequence::Make(
    std::vector<Vertex> vertices, std::vector<Label> labels,
    const RepresentationMatrix& matrix) {
  if (vertices.size() != labels.size()) {
    throw std::invalid_argument("sequence needs one label per vertex");
  }
  VertexLabelSequence sequence;
  if (!vertices.empty()) {
    const auto shift = static_cast<std::ptrdiff_t>(
        std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
    std::rotate(vertices.begin(), vertices.begin() + shift, vertices.end());
    std::rotate(labels.begin(), labels.begin() + shift, labels.end());
  }
  for (Label l : labels) {
    if (l >= 0 && l < matrix.label_count() && matrix.is_strong(l)) {
      ++sequence.strength;
    }
  }
  sequence.vertices = std::move(vertices);
  sequence.labels = std::move(labels);
  return sequence;
}

bool IsClosedSequence(const RepresentationMatrix& matrix,
                      const VertexLabelSequence& sequence) {
  const std::size_t k = sequence.size();
  if (k == 0 || sequence.vertices.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex a = sequence.vertices[i];
    const Vertex b = sequence.vertices[(i + 1) % k];
    const Label l = sequence.labels[i];
    if (l < 0 || l >= matrix.label_count()) return false;
    if (a < 0 || a >= matrix.vertex_count()) return false;
    if (!matrix.contains(l, a) || !matrix.contains(l, b)) return false;
  }
  return true;
}

std::vector<VertexPair> RandomMaximalMatching(std::span<const Vertex> members,
                                              Rng& rng) {
  std::vector<Vertex> shuffled(members.begin(), members.end());
  rng.Shuffle(std::span<Vertex>(shuffled));
  std::vector<VertexPair> pairs;
  pairs.reserve(shuffled.size() / 2);
  for (std::size_t i = 0; i + 1 < shuffled.size(); i += 2) {
    pairs.push_back({std::min(shuffled[i], shuffled[i + 1]),
                     std::max(shuffled[i], shuffled[i + 1])});
  }
  return pairs;
}

BipartizationState::BipartizationState(RepresentationMatrix matrix)
    : matrix_(std::move(matrix)),
      matchings_(static_cast<std::size_t>(matrix_.label_count())),
      excluded_label_(static_cast<std::size_t>(matrix_.label_count()), 0),
      recorded_label_(static_cast<std::size_t>(matrix_.label_count()), 0) {}

void BipartizationState::SetMatching(Label l, std::vector<VertexPair> pairs) {
  const auto members = matrix_.label_set(l);
  if (pairs.size() != members.size() / 2) {
    throw std::invalid_argument("matching of label " + std::to_string(l) +
                                " must have floor(|L|/2) pairs");
  }
  std::vector<Vertex> used;
  for (const auto& pair : pairs) {
    if (pair.a >= pair.b || !matrix_.contains(l, pair.a) ||
        !matrix_.contains(l, pair.b)) {
      throw std::invalid_argument("pair outside label " + std::to_string(l));
    }
    used.push_back(pair.a);
    used.push_back(pair.b);
  }
  std::sort(used.begin(), used.end());
  if (std::adjacent_find(used.begin(), used.end()) != used.end()) {
    throw std::invalid_argument("matching pairs of label " +
                                std::to_string(l) + " overlap");
  }
  std::sort(pairs.begin(), pairs.end());
  matchings_[l] = std::move(pairs);
}

void BipartizationState::Rematch(Label l, Rng& rng) {
  matchings_[l] = RandomMaximalMatching(matrix_.label_set(l), rng);
  std::sort(matchings_[l].begin(), matchings_[l].end());
}

std::vector<SkeletonEdge> BipartizationState::Skeleton() const {
  std::vector<SkeletonEdge> edges;
  for (Label l = 0; l < matrix_.label_count(); ++l) {
    for (const auto& pair : matchings_[l]) edges.push_back({pair.a, pair.b, l});
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

void BipartizationState::RecordZeroStrongCycle(VertexLabelSequence cycle) {
  if (cycle.strength != 0 || cycle.labels.empty()) {
    throw std::invalid_argument("only 0-strong cycles can be recorded");
  }
  for (Label l : cycle.labels) {
    if (recorded_label_[l]) label_disjoint_ = false;
  }
  for (Label l : cycle.labels) recorded_label_[l] = 1;
  const Label chosen = *std::min_element(cycle.labels.begin(),
                                         cycle.labels.end());
  if (!IsExcluded(chosen)) {
    const auto& pair = matchings_[chosen].front();
    excluded_.push_back({pair.a, pair.b, chosen});
    excluded_label_[chosen] = 1;
  }
  zero_strong_cycles_.push_back(std::move(cycle));
}

void BipartizationState::ResetDetection() {
  excluded_.clear();
  std::fill(excluded_label_.begin(), excluded_label_.end(), 0);
  std::fill(recorded_label_.begin(), recorded_label_.end(), 0);
  zero_strong_cycles_.clear();
  label_disjoint_ = true;
}

std::optional<VertexLabelSequence> FindCoddMember(BipartizationState& state) {
  const auto& matrix = state.matrix();
  const Vertex n = matrix.vertex_count();
  while (true) {
    const WorkingGraph graph =
        BuildAdjacency(n, ActiveEdges(state), matrix, /*collapse=*/true);
    const auto flagged = NonBipartiteComponents(graph, n);
    auto cycle = ShortestOddCycle(graph, n, flagged);
    if (!cycle) return std::nullopt;
    auto sequence = VertexLabelSequence::Make(
        std::move(cycle->vertices), std::move(cycle->labels), matrix);
    if (sequence.strength > 0) return sequence;
    state.RecordZeroStrongCycle(std::move(sequence));
  }
}

std::int64_t DefaultMaxRematch(Vertex n) {
  const auto log_term = static_cast<std::int64_t>(
      std::ceil(std::log2(static_cast<double>(n) + 2.0)));
  return std::max<std::int64_t>(1000, 10 * static_cast<std::int64_t>(n) *
                                          log_term);
}

BipartizationOutcome WeakBipartization(const RepresentationMatrix& matrix,
                                       Seed seed, std::int64_t max_rematch) {
  if (max_rematch <= 0) max_rematch = DefaultMaxRematch(matrix.vertex_count());
  Rng rng(seed);
  BipartizationOutcome outcome{.state = BipartizationState(matrix)};
  auto& state = outcome.state;
  for (Label l = 0; l < matrix.label_count(); ++l) state.Rematch(l, rng);

  while (true) {
    state.ResetDetection();
    const auto member = FindCoddMember(state);
    if (!member) {
      outcome.terminated = true;
      break;
    }
    ++outcome.codd_encounters;
    if (outcome.iterations >= max_rematch) break;
    const Label target = *std::min_element(
        member->labels.begin(), member->labels.end(), [&](Label x, Label y) {
          const bool xs = matrix.is_strong(x);
          const bool ys = matrix.is_strong(y);
          if (xs != ys) return xs;
          return x < y;
        });
    state.Rematch(target, rng);
    ++outcome.iterations;
  }
  outcome.zero_strong_cycles.assign(state.zero_strong_cycles().begin(),
                                    state.zero_strong_cycles().end());
  outcome.label_disjoint = state.label_disjoint();
  return outcome;
}

Coloring ExtractColoring(const BipartizationOutcome& outcome) {
  if (!outcome.terminated) {
    throw std::invalid_argument(
        "cannot extract a coloring from a non-terminated bipartization");
  }
  const auto& state = outcome.state;
  const Vertex n = state.matrix().vertex_count();
  const WorkingGraph h =
      BuildAdjacency(n, ActiveEdges(state), state.matrix(), /*collapse=*/false);

  std::vector<int> values(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (values[root] != 0) continue;
    values[root] = 1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      for (auto i = h.begin(u); i < h.end(u); ++i) {
        const Vertex w = h.neighbors[i];
        if (values[w] == 0) {
          values[w] = -values[u];
          queue.push_back(w);
        } else if (values[w] == values[u]) {
          throw std::logic_error("bipartized skeleton still has an odd cycle");
        }
      }
    }
  }
  return Coloring(values);
}

}  // namespace wrig
