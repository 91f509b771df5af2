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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "test_support.h"
#include "wrig/sequence_count.h"

namespace wrig {
namespace {

TEST(ExpectedSequenceCountTest, Values) {
  EXPECT_NEAR(ExpectedSequenceCount(5, 5, 0.2, 3),
              (1.0 / 3) * 60 * 60 * std::pow(0.2, 6), 1e-12);
  EXPECT_NEAR(ExpectedSequenceCount(5, 5, 0.2, 3), 0.0768, 1e-12);
  EXPECT_NEAR(ExpectedSequenceCount(7, 4, 0.3, 1), 7 * 4 * 0.09, 1e-12);
  EXPECT_EQ(ExpectedSequenceCount(7, 4, 0.0, 2), 0.0);
  // n!/(n-k)! m!/(m-k)! p^{2k} / k at a larger size.
  const double direct = 20.0 * 19 * 18 * 17 * 15 * 14 * 13 * 12 *
                        std::pow(0.1, 8) / 4;
  EXPECT_NEAR(ExpectedSequenceCount(20, 15, 0.1, 4), direct, 1e-12 * direct);
}

TEST(ExpectedSequenceCountTest, RejectsBadLength) {
  EXPECT_THROW(ExpectedSequenceCount(5, 5, 0.2, 0), std::invalid_argument);
  EXPECT_THROW(ExpectedSequenceCount(5, 3, 0.2, 4), std::invalid_argument);
}

TEST(CountSequencesExactTest, WeakTriangle) {
  const auto r = testing::FromOneBased(3, {{1, 2}, {2, 3}, {1, 3}});
  EXPECT_EQ(CountSequencesExact(r, 3), 2u);
  EXPECT_EQ(CountSequencesExact(r, 2), 0u);
  EXPECT_EQ(CountSequencesExact(r, 1), 6u);
}

TEST(CountSequencesExactTest, LongerThanVertexCount) {
  const auto r = testing::FromOneBased(2, {{1, 2}, {1, 2}, {1, 2}});
  EXPECT_EQ(CountSequencesExact(r, 3), 0u);
  // Two vertex orders times six ordered label pairs, over two rotations.
  EXPECT_EQ(CountSequencesExact(r, 2), 6u);
}

TEST(CountSequencesExactTest, MatchesEnumeration) {
  Rng rng(61);
  for (int rep = 0; rep < 150; ++rep) {
    const auto n = static_cast<Vertex>(1 + rng.Below(7));
    const auto m = static_cast<Label>(1 + rng.Below(7));
    const auto r = testing::RandomMatrix(rng, n, m, rng.Uniform01());
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(CountSequencesExact(r, k), testing::NaiveSequenceCount(r, k))
          << "k=" << k;
    }
  }
}

TEST(CountSequencesExactTest, InvariantUnderRelabeling) {
  Rng rng(67);
  for (int rep = 0; rep < 50; ++rep) {
    const auto r = testing::RandomMatrix(rng, 8, 7, 0.4);
    std::vector<Vertex> vperm(8);
    std::vector<Label> lperm(7);
    std::iota(vperm.begin(), vperm.end(), 0);
    std::iota(lperm.begin(), lperm.end(), 0);
    rng.Shuffle(std::span<Vertex>(vperm));
    rng.Shuffle(std::span<Label>(lperm));
    std::vector<std::vector<Vertex>> sets(7);
    for (Label l = 0; l < 7; ++l) {
      for (Vertex v : r.label_set(l)) sets[lperm[l]].push_back(vperm[v]);
    }
    for (auto& set : sets) std::sort(set.begin(), set.end());
    const RepresentationMatrix relabeled(7, 8, sets);
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(CountSequencesExact(relabeled, k), CountSequencesExact(r, k));
    }
  }
}

TEST(CountSequencesExactTest, EnforcesLimits) {
  const auto r = testing::FromOneBased(3, {{1, 2}});
  EXPECT_THROW(CountSequencesExact(r, 0), std::invalid_argument);
  const RepresentationMatrix six(6, 6, {{0, 1}, {}, {}, {}, {}, {}});
  EXPECT_THROW(CountSequencesExact(six, 5), std::invalid_argument);
  const RepresentationMatrix big(1, 13, {{0, 1}});
  EXPECT_THROW(CountSequencesExact(big, 3), std::invalid_argument);
  EXPECT_NO_THROW(CountSequencesExact(big, 3, {.max_k = 4, .max_vertices = 13}));
}

}  // namespace
}  // namespace wrig
