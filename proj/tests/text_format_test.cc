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

#include <sstream>

#include <gtest/gtest.h>

#include "test_support.h"
#include "wrig/text_format.h"

namespace wrig {
namespace {

RepresentationMatrix Parse(const std::string& text) {
  std::istringstream in(text);
  return ReadMatrix(in);
}

TEST(MatrixFormatTest, WritesExactBytes) {
  const auto r = testing::FromOneBased(4, {{1, 2}, {}, {2, 3, 4}});
  EXPECT_EQ(MatrixToString(r), "WRIG 1 3 4\n1 2 1 2\n2 0\n3 3 2 3 4\n");
}

TEST(MatrixFormatTest, ZeroLabels) {
  const RepresentationMatrix r(0, 2, {});
  EXPECT_EQ(MatrixToString(r), "WRIG 1 0 2\n");
  EXPECT_EQ(Parse("WRIG 1 0 2\n"), r);
}

TEST(MatrixFormatTest, RoundTrips) {
  Rng rng(3);
  for (int rep = 0; rep < 200; ++rep) {
    const auto n = static_cast<Vertex>(1 + rng.Below(15));
    const auto m = static_cast<Label>(rng.Below(10));
    const auto r = testing::RandomMatrix(rng, n, m, rng.Uniform01());
    const std::string text = MatrixToString(r);
    EXPECT_EQ(Parse(text), r);
    EXPECT_EQ(MatrixToString(Parse(text)), text);
  }
}

TEST(MatrixFormatTest, ToleratesTrailingBlankLinesAndMissingFinalNewline) {
  const auto r = testing::FromOneBased(2, {{1, 2}});
  EXPECT_EQ(Parse("WRIG 1 1 2\n1 2 1 2\n\n\n"), r);
  EXPECT_EQ(Parse("WRIG 1 1 2\n1 2 1 2"), r);
}

TEST(MatrixFormatTest, RejectsMalformedInput) {
  const std::vector<std::string> bad = {
      "",
      "WRIG 2 1 2\n1 0\n",          // version
      "WRIGX 1 1 2\n1 0\n",         // magic
      "WRIG 1 2 2\n1 0\n",          // too few lines
      "WRIG 1 1 2\n1 0\n2 0\n",     // too many lines
      "WRIG 1 1 2\n2 0\n",          // label index
      "WRIG 1 1 2\n1 2 1\n",        // short list
      "WRIG 1 1 2\n1 1 1 2\n",      // long list
      "WRIG 1 1 2\n1 2 2 1\n",      // unsorted
      "WRIG 1 1 2\n1 2 1 1\n",      // duplicate
      "WRIG 1 1 2\n1 1 3\n",        // vertex range
      "WRIG 1 1 2\n1 1 0\n",        // 0 is not a 1-based index
      "WRIG 1 1 0\n1 0\n",          // n must be positive
      "WRIG 1 1 2\n1 1 x\n",        // token
      "WRIG 1 1 2\n\n1 1 1\n",      // blank line inside
      "WRIG 1 1 2 5\n1 0\n",        // extra header token
  };
  for (const auto& text : bad) {
    EXPECT_THROW(Parse(text), FormatError) << text;
  }
}

TEST(ColoringFormatTest, WritesAndReads) {
  const auto x = testing::Colors({1, -1, -1, 1});
  std::ostringstream out;
  WriteColoring(out, x);
  EXPECT_EQ(out.str(), "+1 -1 -1 +1\n");
  std::istringstream in(" +1\t-1\n-1 1 ");
  EXPECT_EQ(ReadColoring(in), x);
}

TEST(ColoringFormatTest, RejectsBadTokens) {
  for (const std::string text : {"", "+1 0", "+1 2", "+1 +-1", "abc"}) {
    std::istringstream in(text);
    EXPECT_THROW(ReadColoring(in), FormatError) << text;
  }
}

}  // namespace
}  // namespace wrig
