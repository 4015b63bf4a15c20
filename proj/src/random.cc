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

#include "qgame/random.h"

#include <cmath>
#include <numbers>

namespace qgame {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}  // namespace

std::uint64_t SplitMix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(SplitMix64(SplitMix64(seed + kGolden) ^ (stream * kGolden + 1))) {}

CounterRng::result_type CounterRng::operator()() {
  ++counter_;
  return SplitMix64(key_ + counter_ * kGolden);
}

double CounterRng::Uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double CounterRng::Normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = Uniform();
  while (u1 <= 0.0) u1 = Uniform();
  const double u2 = Uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

ComplexMatrix HaarUnitary(int n, CounterRng& rng) {
  if (n < 1) throw DimensionError("unitary dimension must be positive");
  ComplexMatrix q(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) q(i, j) = Complex(rng.Normal(), rng.Normal());

  // Modified Gram-Schmidt on the columns, run twice per column. Each R_jj is
  // the positive norm of the residual column; with that phase convention Q
  // is Haar distributed.
  for (int j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < j; ++k) {
        Complex d = 0.0;
        for (int i = 0; i < n; ++i) d += std::conj(q(i, k)) * q(i, j);
        for (int i = 0; i < n; ++i) q(i, j) -= d * q(i, k);
      }
    }
    double norm = 0.0;
    for (int i = 0; i < n; ++i) norm += std::norm(q(i, j));
    norm = std::sqrt(norm);
    for (int i = 0; i < n; ++i) q(i, j) /= norm;
  }
  return q;
}

}  // namespace qgame
