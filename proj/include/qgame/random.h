// Copyright 2026 The qgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGAME_RANDOM_H_
#define QGAME_RANDOM_H_

#include <cstdint>
#include <limits>

#include "qgame/numerics.h"

namespace qgame {

inline constexpr std::uint64_t kDefaultSeed = 3405692893ULL;

// SplitMix64 finalizer (Steele, Lea and Flood, 2014).
std::uint64_t SplitMix64(std::uint64_t x);

// Counter-based generator: the k-th output of a stream is
// SplitMix64(key + (k + 1) * 0x9e3779b97f4a7c15). Streams are addressed by
// (seed, index), so sample i of a scan draws the same numbers regardless of
// which thread runs it or in what order.
//
// Satisfies UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform on [0, 1) with 53 random bits.
  double Uniform();
  // Standard normal via Box-Muller; platform independent.
  double Normal();

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Haar-distributed n x n unitary: complex Gaussian matrix orthonormalized by
// QR with a positive real diagonal in R.
ComplexMatrix HaarUnitary(int n, CounterRng& rng);

}  // namespace qgame

#endif  // QGAME_RANDOM_H_
