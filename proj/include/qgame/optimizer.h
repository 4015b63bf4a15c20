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

// Maximizing the quantum advantage over weight matrices for a fixed basis.
//
// A symmetric P is feasible when measuring the state in the computational
// basis gives the uniform equilibrium: M P M^T = J/n^2 with P >= 0. The
// advantage n * sum_i max_l (P M^T)(i, l) - 1 is convex in P, so the
// maximum is found by fixing the replacement l_i for every i (n^n choices),
// solving one LP per choice and keeping the best.

#ifndef QGAME_OPTIMIZER_H_
#define QGAME_OPTIMIZER_H_

#include <optional>
#include <vector>

#include "qgame/advantage.h"
#include "qgame/polytope.h"
#include "qgame/random.h"
#include "qgame/states.h"

namespace qgame {

inline constexpr int kMaxOptimizerDim = 5;
// Overlap entries are rationalized with this denominator cap.
inline constexpr long kOverlapMaxDenominator = 1000000;

struct FeasibleSet {
  OrthonormalBasis basis;
  RealMatrix m;
  // Exact overlap matrix, present when every entry is within 1e-12 of a
  // rational with denominator <= kOverlapMaxDenominator and the result is
  // exactly doubly stochastic.
  std::optional<RationalMatrix> exact_m;
  // Variables p(i, j) at index i * n + j: M P M^T = J/n^2, p(i, j) = p(j, i),
  // p >= 0. Present with exact_m.
  std::optional<Polytope> exact;
  FloatPolytope approximate;
  // Orthonormal basis (columns, vectorized n x n symmetric matrices) of
  // {D symmetric : M D M^T = 0}. P = J/n^2 + sum_k t_k D_k.
  RealMatrix kernel;
  int kernel_dim = 0;

  int dim() const { return basis.dim(); }
  bool singleton() const { return kernel_dim == 0; }
};

FeasibleSet BuildFeasibleSet(const OrthonormalBasis& basis);

// max |M P M^T - J/n^2|.
double FeasibilityResidual(const RealMatrix& m, const RealMatrix& p);
// max |M (P - J/n^2)|: the stronger condition a column-dependency argument
// relies on. Zero implies FeasibilityResidual zero, not conversely.
double StrongConditionResidual(const RealMatrix& m, const RealMatrix& p);

// Random member: a uniform step along a Gaussian kernel direction, up to the
// boundary of P >= 0. Returns J/n^2 for a singleton set.
WeightMatrix SampleFeasible(const FeasibleSet& set, CounterRng& rng);

struct RankTwoDependency {
  // Column a = x * column b + (1 - x) * column c, with x <= 1/2.
  int a = 0, b = 1, c = 2;
  double x = 0.0;
  double bound = 0.0;  // 1/3 + 1 / (3 max(x, 1 - x))
};

struct ExactRankTwoDependency {
  int a = 0, b = 1, c = 2;
  Rational x;
  Rational bound;
};

// Requires a 3x3 doubly stochastic rank-2 matrix (PreconditionError
// otherwise) and a convex column dependency under some ordering
// (PreconditionError if none within tol). Returns the smallest bound.
RankTwoDependency RankTwoBound(const RealMatrix& m, double tol = 1e-9);
ExactRankTwoDependency RankTwoBound(const RationalMatrix& m);

// P = J/9 + v k^T with v_a = 1, v_b = -x, v_c = -(1 - x), so M (P - J/9) = 0.
// P >= 0 holds on the box -1/9 <= k_j <= 1/(9 max(x, 1 - x)).
struct RestrictedFamily {
  RankTwoDependency dependency;
  std::vector<double> v;
  double k_lower = 0.0;
  double k_upper = 0.0;

  RealMatrix Member(const std::vector<double>& k) const;
};

RestrictedFamily MakeRestrictedFamily(const RealMatrix& m, double tol = 1e-9);

struct RestrictedOptimum {
  double qa = 0.0;
  std::vector<double> k;
  RealMatrix p;  // generally not symmetric
};

// Maximum of the (convex) advantage over the box, attained at one of its 8
// vertices. Members need not be symmetric, so the advantage is evaluated
// with the quantum player on the first system.
RestrictedOptimum OptimizeRestricted(const OrthonormalBasis& basis,
                                     const RestrictedFamily& family, Side side);

struct OptimizationResult {
  RealMatrix best_p;
  double qa = 0.0;
  Side side = Side::kU1;
  std::vector<int> assignment;
  // Indexed by assignment in lexicographic order (l_0 most significant).
  std::vector<double> per_assignment_values;
  std::optional<double> bound;
  std::optional<double> x;
  bool exact = false;
  std::optional<Rational> exact_qa;
  std::optional<RationalMatrix> exact_p;
  // FeasibilityResidual of best_p plus its most negative entry, if any.
  double residual = 0.0;
};

// Throws UnsupportedDimension outside 2 <= n <= kMaxOptimizerDim. Assignment
// LPs run on `threads` workers (0 picks the hardware count); the result does
// not depend on it.
OptimizationResult OptimizeWeights(const OrthonormalBasis& basis, Side side,
                                   int threads = 0);

}  // namespace qgame

#endif  // QGAME_OPTIMIZER_H_
