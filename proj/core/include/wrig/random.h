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

#ifndef WRIG_RANDOM_H_
#define WRIG_RANDOM_H_

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

namespace wrig {

// Root seed of a run. Independent streams are obtained with DeriveSeed, never
// by advancing one generator across trials, so results do not depend on the
// order in which trials are scheduled.
using Seed = std::uint64_t;

// SplitMix64 finalizer.
constexpr std::uint64_t Mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr Seed DeriveSeed(Seed parent, std::uint64_t index) {
  return Mix64(Mix64(parent) ^ Mix64(index ^ 0x632BE59BD9B4E019ULL));
}

constexpr Seed DeriveSeed(Seed parent, std::uint64_t a, std::uint64_t b) {
  return DeriveSeed(DeriveSeed(parent, a), b);
}

// xoshiro256** seeded through SplitMix64. Satisfies
// std::uniform_random_bit_generator; the helpers below avoid std::
// distributions so that draws are identical across standard libraries.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(Seed seed) {
    for (auto& word : state_) {
      word = Mix64(seed);
      seed += 0x9E3779B97F4A7C15ULL;
    }
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    const std::uint64_t result = Rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = Rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform on [0, bound); bound > 0. Lemire's multiply-and-reject.
  std::uint64_t Below(std::uint64_t bound) {
    __extension__ using U128 = unsigned __int128;
    U128 product = static_cast<U128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<U128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

  // +1 or -1 with probability 1/2 each.
  int Sign() { return ((*this)() >> 63) != 0 ? 1 : -1; }

  bool Bernoulli(double p) { return Uniform01() < p; }

  template <typename T>
  void Shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(Below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  static constexpr std::uint64_t Rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace wrig

#endif  // WRIG_RANDOM_H_
