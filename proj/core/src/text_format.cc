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

#include "wrig/text_format.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>
#include <vector>

namespace wrig {
namespace {

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::int64_t ParseInt(std::string_view token, std::string_view what) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw FormatError("invalid " + std::string(what) + ": '" +
                      std::string(token) + "'");
  }
  return value;
}

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

void WriteMatrix(std::ostream& out, const RepresentationMatrix& matrix) {
  out << "WRIG 1 " << matrix.label_count() << ' ' << matrix.vertex_count()
      << '\n';
  for (Label l = 0; l < matrix.label_count(); ++l) {
    const auto set = matrix.label_set(l);
    out << (l + 1) << ' ' << set.size();
    for (Vertex v : set) out << ' ' << (v + 1);
    out << '\n';
  }
}

std::string MatrixToString(const RepresentationMatrix& matrix) {
  std::ostringstream out;
  WriteMatrix(out, matrix);
  return out.str();
}

RepresentationMatrix ReadMatrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty matrix input");
  const auto header = SplitFields(line);
  if (header.size() != 4 || header[0] != "WRIG" || header[1] != "1") {
    throw FormatError("expected header 'WRIG 1 <m> <n>'");
  }
  const std::int64_t m = ParseInt(header[2], "label count");
  const std::int64_t n = ParseInt(header[3], "vertex count");
  if (m < 0 || n <= 0 || m > (1 << 30) || n > (1 << 30)) {
    throw FormatError("label/vertex counts out of range");
  }

  std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(m));
  for (std::int64_t l = 0; l < m; ++l) {
    if (!std::getline(in, line)) {
      throw FormatError("expected " + std::to_string(m) +
                        " label lines, got " + std::to_string(l));
    }
    const auto fields = SplitFields(line);
    if (fields.size() < 2) {
      throw FormatError("label line " + std::to_string(l + 1) + " too short");
    }
    if (ParseInt(fields[0], "label index") != l + 1) {
      throw FormatError("label lines must be numbered 1.." +
                        std::to_string(m) + " in order");
    }
    const std::int64_t k = ParseInt(fields[1], "set size");
    if (k < 0 || static_cast<std::size_t>(k) != fields.size() - 2) {
      throw FormatError("label " + std::to_string(l + 1) +
                        ": set size does not match vertex count");
    }
    auto& set = sets[static_cast<std::size_t>(l)];
    set.reserve(static_cast<std::size_t>(k));
    for (std::size_t i = 2; i < fields.size(); ++i) {
      const std::int64_t v = ParseInt(fields[i], "vertex index");
      if (v < 1 || v > n) {
        throw FormatError("label " + std::to_string(l + 1) + ": vertex " +
                          std::to_string(v) + " out of range");
      }
      if (!set.empty() && set.back() >= v - 1) {
        throw FormatError("label " + std::to_string(l + 1) +
                          ": vertices must be strictly increasing");
      }
      set.push_back(static_cast<Vertex>(v - 1));
    }
  }
  while (std::getline(in, line)) {
    if (!IsBlank(line)) throw FormatError("unexpected content after label lines");
  }
  return RepresentationMatrix(static_cast<Label>(m), static_cast<Vertex>(n),
                              sets);
}

RepresentationMatrix ReadMatrixFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return ReadMatrix(in);
}

void WriteColoring(std::ostream& out, const Coloring& coloring) {
  for (Vertex v = 0; v < coloring.size(); ++v) {
    if (v > 0) out << ' ';
    out << (coloring[v] > 0 ? "+1" : "-1");
  }
  out << '\n';
}

Coloring ReadColoring(std::istream& in) {
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    if (token == "+1" || token == "1") {
      values.push_back(1);
    } else if (token == "-1") {
      values.push_back(-1);
    } else {
      throw FormatError("invalid coloring token '" + token + "'");
    }
  }
  if (values.empty()) throw FormatError("empty coloring");
  return Coloring(values);
}

}  // namespace wrig
