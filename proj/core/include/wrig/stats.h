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

#ifndef WRIG_STATS_H_
#define WRIG_STATS_H_

#include <cstdint>
#include <limits>

namespace wrig {

// Streaming mean/variance (Welford) with Chan's pairwise merge.
class RunningStats {
 public:
  void Add(double x);
  void Merge(const RunningStats& other);

  std::int64_t count() const { return count_; }
  double mean() const { return mean_; }
  // Sample variance with the n - 1 denominator; 0 when count < 2.
  double variance() const;
  bool variance_defined() const { return count_ >= 2; }
  double stddev() const;
  double std_error() const;
  double min() const { return min_; }
  double max() const { return max_; }

 private:
  std::int64_t count_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
  double min_ = std::numeric_limits<double>::infinity();
  double max_ = -std::numeric_limits<double>::infinity();
};

}  // namespace wrig

#endif  // WRIG_STATS_H_
