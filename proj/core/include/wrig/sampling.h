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

#ifndef WRIG_SAMPLING_H_
#define WRIG_SAMPLING_H_

#include <optional>
#include <string>
#include <variant>

#include "wrig/random.h"
#include "wrig/representation_matrix.h"

namespace wrig {

// m = floor(n^alpha), with the label count derived from the vertex count.
struct AlphaDerivation {
  double alpha;
};

// m = n and p = c / n.
struct DensityDerivation {
  double c;
};

using ParamDerivation = std::variant<AlphaDerivation, DensityDerivation>;

// Parameters of the model G(n, m, p): n vertices, m labels, each entry of R
// is 1 independently with probability p.
struct ModelParams {
  Vertex n = 1;
  Label m = 1;
  double p = 0.0;
  std::optional<ParamDerivation> derivation;

  static ModelParams Fixed(Vertex n, Label m, double p);
  static ModelParams WithAlpha(Vertex n, double alpha, double p);
  static ModelParams WithDensity(Vertex n, double c);

  // Throws std::invalid_argument on violated invariants.
  void Validate() const;

  // Whether p lies in [sqrt(1/(nm)), 1/sqrt(m)], the range the concentration
  // and random-cut results are stated for (with unit constants).
  bool InStudiedRange() const;

  std::string Describe() const;
};

// floor(n^alpha), robust to pow() landing just below an exact integer.
Label LabelCountForAlpha(Vertex n, double alpha);

enum class SamplingMethod {
  kAuto,            // geometric skips when p < 0.1, dense otherwise
  kDense,           // one Bernoulli draw per entry
  kGeometricSkip,   // jump between successes over the n*m grid
};

// Draws R with i.i.d. Bernoulli(p) entries. Deterministic given (params,
// seed, method); the two methods are equal in law but not draw-for-draw.
RepresentationMatrix SampleMatrix(const ModelParams& params, Seed seed,
                                  SamplingMethod method = SamplingMethod::kAuto);

// E[sum_{i != j} [R^T R]_{ij}] = n (n - 1) m p^2.
double ExpectedEdgeWeightSum(const ModelParams& params);

}  // namespace wrig

#endif  // WRIG_SAMPLING_H_
