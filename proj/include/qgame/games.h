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

#ifndef QGAME_GAMES_H_
#define QGAME_GAMES_H_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qgame/numerics.h"
#include "qgame/polytope.h"

namespace qgame {

// Two-player strategic-form game with n strategies per player. Entry (i, j)
// of u1/u2 is the payoff when Player 1 plays i and Player 2 plays j.
class BimatrixGame {
 public:
  BimatrixGame(RealMatrix u1, RealMatrix u2);

  int n() const { return u1_.rows(); }
  const RealMatrix& u1() const { return u1_; }
  const RealMatrix& u2() const { return u2_; }
  const RealMatrix& payoff(int player) const { return player == 0 ? u1_ : u2_; }
  // u2 == -u1 entrywise.
  bool zero_sum() const { return zero_sum_; }

 private:
  RealMatrix u1_;
  RealMatrix u2_;
  bool zero_sum_;
};

// Joint distribution q(i, j) over strategy pairs.
class JointDistribution {
 public:
  explicit JointDistribution(RealMatrix q, double tol = kDefaultTol);

  static JointDistribution Uniform(int n);
  static JointDistribution PointMass(int n, int i, int j);
  static JointDistribution Product(std::span<const double> p1,
                                   std::span<const double> p2,
                                   double tol = kDefaultTol);

  const RealMatrix& q() const { return q_; }
  double operator()(int i, int j) const { return q_(i, j); }
  int rows() const { return q_.rows(); }
  int cols() const { return q_.cols(); }

 private:
  RealMatrix q_;
};

// U1 = n I - J, U2 = -U1: Player 1 wins when the two dice agree.
BimatrixGame DiceGame(int n);

// True when the game is DiceGame(g.n()) within tol.
bool IsDiceGame(const BimatrixGame& g, double tol = 1e-12);

// (sum q u1, sum q u2).
std::pair<double, double> ExpectedPayoffs(const JointDistribution& q,
                                          const BimatrixGame& g);

struct EquilibriumCheck {
  bool holds = false;
  double max_violation = 0.0;  // utility units
};

// Every pure-strategy deviation i -> i' (rows for Player 1, columns for
// Player 2) must not gain more than tol.
EquilibriumCheck IsCorrelatedEquilibrium(const JointDistribution& q,
                                         const BimatrixGame& g,
                                         double tol = kDefaultTol);

// Mixed Nash equilibrium check for the product p1 x p2. Only strategies in
// the support are required to be best responses.
bool IsNashEquilibrium(std::span<const double> p1, std::span<const double> p2,
                       const BimatrixGame& g, double tol = kDefaultTol);

// The CE polytope over variables q(i, j), index i * n + j, in exact
// arithmetic. Payoffs are converted to rationals exactly.
Polytope CorrelatedEquilibriumPolytope(const BimatrixGame& g);

struct UniqueEquilibrium {
  bool unique = false;
  // The single point when unique (exact).
  std::optional<RationalMatrix> witness;
  // Per-coordinate ranges, row-major over (i, j).
  std::vector<CoordinateRange> ranges;
};

// Decides whether the CE polytope is a single point by computing every
// coordinate's exact minimum and maximum.
UniqueEquilibrium CePolytopeUnique(const BimatrixGame& g);

}  // namespace qgame

#endif  // QGAME_GAMES_H_
