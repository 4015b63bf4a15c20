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

#include <vector>

#include "doctest.h"
#include "qgame/games.h"

namespace qgame {
namespace {

TEST_CASE("dice game payoffs") {
  const BimatrixGame g = DiceGame(3);
  CHECK(g.u1() == RealMatrix::FromRows({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}));
  CHECK(g.zero_sum());
  CHECK(IsDiceGame(g));
  CHECK_THROWS_AS(DiceGame(1), InvalidInput);
  const BimatrixGame coordination(RealMatrix::Identity(2), RealMatrix::Identity(2));
  CHECK_FALSE(coordination.zero_sum());
  CHECK_FALSE(IsDiceGame(coordination));
}

TEST_CASE("game and distribution validation") {
  CHECK_THROWS_AS(BimatrixGame(RealMatrix(2, 2), RealMatrix(3, 3)), InvalidInput);
  CHECK_THROWS_AS(BimatrixGame(RealMatrix(2, 3), RealMatrix(2, 3)), InvalidInput);
  CHECK_THROWS_AS(JointDistribution(RealMatrix::FromRows({{0.5, 0.6}, {0, -0.1}})),
                  InvalidInput);
  CHECK_THROWS_AS(JointDistribution(RealMatrix::FromRows({{0.5, 0.6}, {0, 0}})),
                  InvalidInput);
}

TEST_CASE("uniform play is an equilibrium of the dice game") {
  for (int n = 2; n <= 5; ++n) {
    const BimatrixGame g = DiceGame(n);
    const JointDistribution u = JointDistribution::Uniform(n);
    const auto [v1, v2] = ExpectedPayoffs(u, g);
    CHECK(v1 == doctest::Approx(0.0));
    CHECK(v2 == doctest::Approx(0.0));
    CHECK(IsCorrelatedEquilibrium(u, g).holds);
    const std::vector<double> p(n, 1.0 / n);
    CHECK(IsNashEquilibrium(p, p, g));
  }
}

TEST_CASE("non-uniform play is not an equilibrium") {
  const BimatrixGame g = DiceGame(3);
  const EquilibriumCheck point = IsCorrelatedEquilibrium(JointDistribution::PointMass(3, 0, 0), g);
  CHECK_FALSE(point.holds);
  // Player 2 told 0 moves away and gains 3.
  CHECK(point.max_violation == doctest::Approx(3.0));

  const std::vector<double> pure = {1, 0, 0};
  const std::vector<double> mixed = {1.0 / 3, 1.0 / 3, 1.0 / 3};
  CHECK_FALSE(IsNashEquilibrium(mixed, pure, g));
  CHECK_THROWS_AS(IsNashEquilibrium(std::vector<double>{0.5, 0.6, 0}, mixed, g), InvalidInput);
}

TEST_CASE("Nash equilibria are product correlated equilibria") {
  const BimatrixGame g = DiceGame(2);
  const std::vector<double> p = {0.5, 0.5};
  CHECK(IsNashEquilibrium(p, p, g));
  CHECK(IsCorrelatedEquilibrium(JointDistribution::Product(p, p), g).holds);
}

TEST_CASE("the dice game has a unique correlated equilibrium") {
  for (int n = 2; n <= 4; ++n) {
    const UniqueEquilibrium u = CePolytopeUnique(DiceGame(n));
    CHECK(u.unique);
    REQUIRE(u.witness.has_value());
    for (const Rational& v : u.witness->data()) CHECK(v == Rational(1, n * n));
  }
}

TEST_CASE("a coordination game has many correlated equilibria") {
  const BimatrixGame g(RealMatrix::Identity(2), RealMatrix::Identity(2));
  const UniqueEquilibrium u = CePolytopeUnique(g);
  CHECK_FALSE(u.unique);
  CHECK_FALSE(u.witness.has_value());
  CHECK(u.ranges[0].min == 0);
  CHECK(u.ranges[0].max == 1);
}

}  // namespace
}  // namespace qgame
