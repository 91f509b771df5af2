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

#include "wrig/sampling.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace wrig {

Label LabelCountForAlpha(Vertex n, double alpha) {
  return static_cast<Label>(
      std::floor(std::pow(static_cast<double>(n), alpha) + 1e-9));
}

ModelParams ModelParams::Fixed(Vertex n, Label m, double p) {
  ModelParams params{n, m, p, std::nullopt};
  params.Validate();
  return params;
}

ModelParams ModelParams::WithAlpha(Vertex n, double alpha, double p) {
  ModelParams params{n, LabelCountForAlpha(n, alpha), p,
                     AlphaDerivation{alpha}};
  params.Validate();
  return params;
}

ModelParams ModelParams::WithDensity(Vertex n, double c) {
  ModelParams params{n, n, c / static_cast<double>(n), DensityDerivation{c}};
  params.Validate();
  return params;
}

void ModelParams::Validate() const {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(fmt::format("p = {} is not in [0, 1]", p));
  }
  if (!derivation) return;
  if (const auto* a = std::get_if<AlphaDerivation>(&*derivation)) {
    if (m != LabelCountForAlpha(n, a->alpha)) {
      throw std::invalid_argument("m does not equal floor(n^alpha)");
    }
  } else if (const auto* d = std::get_if<DensityDerivation>(&*derivation)) {
    if (m != n) throw std::invalid_argument("density derivation needs m == n");
    if (std::abs(p * n - d->c) >= 1e-9) {
      throw std::invalid_argument("p does not equal c / n");
    }
  }
}

bool ModelParams::InStudiedRange() const {
  const double lower = std::sqrt(1.0 / (static_cast<double>(n) * m));
  const double upper = 1.0 / std::sqrt(static_cast<double>(m));
  return p >= lower * (1 - 1e-12) && p <= upper * (1 + 1e-12);
}

std::string ModelParams::Describe() const {
  std::string text = fmt::format("n={} m={} p={}", n, m, p);
  if (derivation) {
    if (const auto* a = std::get_if<AlphaDerivation>(&*derivation)) {
      text += fmt::format(" (alpha={})", a->alpha);
    } else {
      text += fmt::format(" (c={})", std::get<DensityDerivation>(*derivation).c);
    }
  }
  return text;
}

RepresentationMatrix SampleMatrix(const ModelParams& params, Seed seed,
                                  SamplingMethod method) {
  params.Validate();
  const Vertex n = params.n;
  const Label m = params.m;
  const double p = params.p;
  Rng rng(seed);

  std::vector<std::int64_t> offsets(static_cast<std::size_t>(m) + 1, 0);
  std::vector<Vertex> members;
  members.reserve(static_cast<std::size_t>(
      static_cast<double>(n) * m * p * 1.1 + 16));

  if (method == SamplingMethod::kAuto) {
    method = p < 0.1 ? SamplingMethod::kGeometricSkip : SamplingMethod::kDense;
  }

  if (p <= 0.0) {
    // All label sets empty; offsets are already zero.
  } else if (method == SamplingMethod::kDense || p >= 1.0) {
    for (Label l = 0; l < m; ++l) {
      for (Vertex v = 0; v < n; ++v) {
        if (p >= 1.0 || rng.Bernoulli(p)) members.push_back(v);
      }
      offsets[l + 1] = static_cast<std::int64_t>(members.size());
    }
  } else {
    // Entries are visited in label-major order; the gap to the next success
    // is Geometric(p) on {0, 1, ...}.
    const std::int64_t cells = static_cast<std::int64_t>(n) * m;
    const double log_q = std::log1p(-p);
    std::int64_t cell = -1;
    Label current = 0;
    while (true) {
      const double u = 1.0 - rng.Uniform01();  // (0, 1]
      const double gap = std::floor(std::log(u) / log_q);
      if (gap >= static_cast<double>(cells - cell - 1)) break;
      cell += 1 + static_cast<std::int64_t>(gap);
      const auto l = static_cast<Label>(cell / n);
      while (current < l) {
        offsets[++current] = static_cast<std::int64_t>(members.size());
      }
      members.push_back(static_cast<Vertex>(cell % n));
    }
    while (current < m) {
      offsets[++current] = static_cast<std::int64_t>(members.size());
    }
  }
  return RepresentationMatrix::FromSortedCsr(m, n, std::move(offsets),
                                             std::move(members));
}

double ExpectedEdgeWeightSum(const ModelParams& params) {
  const double n = params.n;
  return n * (n - 1.0) * params.m * params.p * params.p;
}

}  // namespace wrig
