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

#ifndef WRIG_TEXT_FORMAT_H_
#define WRIG_TEXT_FORMAT_H_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "wrig/representation_matrix.h"

namespace wrig {

// Raised for malformed matrix or coloring text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Matrix text format, 1-based indices, LF line endings:
//
//   WRIG 1 <m> <n>
//   <l> <k> <v1> ... <vk>      (exactly m lines, l = 1..m in order)
//
// Vertex lists are strictly increasing. Blank lines after the last label
// line are tolerated on input and never written.
void WriteMatrix(std::ostream& out, const RepresentationMatrix& matrix);
std::string MatrixToString(const RepresentationMatrix& matrix);
RepresentationMatrix ReadMatrix(std::istream& in);
RepresentationMatrix ReadMatrixFile(const std::string& path);

// Coloring text: whitespace-separated "+1"/"-1" tokens. Written on a single
// line terminated by LF.
void WriteColoring(std::ostream& out, const Coloring& coloring);
Coloring ReadColoring(std::istream& in);

}  // namespace wrig

#endif  // WRIG_TEXT_FORMAT_H_
