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

#include <cmath>

#include "doctest.h"
#include "qgame/optimizer.h"

namespace qgame {
namespace {

constexpr double kTwoThirds = 2.0 / 3.0;

// {|psi_0>, |psi_1>, |psi_2>} with |<i|psi_0>|^2 == |<i|psi_1>|^2 for every i,
// so M has two equal columns, but with irrational entries.
OrthonormalBasis IrrationalRankTwoBasis() {
  const double a = 1.0 / std::sqrt(7.0);        // |x|^2
  const double b = (1.0 - a) * std::sqrt(0.3);  // |y|^2
  const double c = 1.0 - a - b;                 // |z|^2
  // a + b e^{i beta} + c e^{i gamma} = 0 closes a triangle.
  const double cos_beta = (c * c - a * a - b * b) / (2 * a * b);
  const double beta = std::acos(cos_beta);
  const Complex tail = -(a + b * std::polar(1.0, beta)) / c;
  const Complex x = std::sqrt(a), y = std::sqrt(b), z = std::sqrt(c);
  const Complex psi0[3] = {x, y, z};
  const Complex psi1[3] = {x, y * std::polar(1.0, beta), z * tail};
  // conj(psi0 x psi1) is orthogonal to both.
  Complex psi2[3] = {std::conj(psi0[1] * psi1[2] - psi0[2] * psi1[1]),
                     std::conj(psi0[2] * psi1[0] - psi0[0] * psi1[2]),
                     std::conj(psi0[0] * psi1[1] - psi0[1] * psi1[0])};
  double norm = 0;
  for (const Complex& v : psi2) norm += std::norm(v);
  ComplexMatrix kets(3, 3);
  for (int i = 0; i < 3; ++i) {
    kets(i, 0) = psi0[i];
    kets(i, 1) = psi1[i];
    kets(i, 2) = psi2[i] / std::sqrt(norm);
  }
  return OrthonormalBasis(kets, 1e-12);
}

TEST_CASE("feasible set of a full-rank basis is a point") {
  const FeasibleSet comp = BuildFeasibleSet(OrthonormalBasis::Computational(3));
  CHECK(comp.singleton());
  CHECK(comp.exact_m.has_value());
  CounterRng rng(1);
  const FeasibleSet random = BuildFeasibleSet(OrthonormalBasis::Random(3, rng));
  CHECK(random.singleton());
  CHECK_FALSE(random.exact_m.has_value());
}

TEST_CASE("feasible set of the rank-two basis") {
  const FeasibleSet set = BuildFeasibleSet(PlusMinusTwoBasis());
  CHECK_FALSE(set.singleton());
  REQUIRE(set.exact.has_value());
  const ReferenceStates refs = MakeReferenceStates();
  const RealMatrix& paper = refs.n3_zero_discord.weights().p();
  CHECK(FeasibilityResidual(set.m, paper) < 1e-15);
  CHECK(FeasibilityResidual(set.m, refs.n3_alternative.weights().p()) < 1e-15);
  CHECK(FeasibilityResidual(set.m, RealMatrix(3, 3, 1.0 / 9)) < 1e-15);
  // The paper's matrix meets M P M^T = J/9 but not M (P - J/9) = 0.
  CHECK(StrongConditionResidual(set.m, paper) == doctest::Approx(1.0 / 9));
  CHECK(StrongConditionResidual(set.m, RealMatrix(3, 3, 1.0 / 9)) < 1e-15);

  std::vector<Rational> x(9);
  for (int e = 0; e < 9; ++e) x[e] = Rationalize(paper.data()[e], 100);
  CHECK(MaxViolation(*set.exact, x) == 0);
}

TEST_CASE("sampled feasible points") {
  const FeasibleSet set = BuildFeasibleSet(PlusMinusTwoBasis());
  for (int k = 0; k < 100; ++k) {
    CounterRng rng(9, k);
    const WeightMatrix w = SampleFeasible(set, rng);
    CHECK(FeasibilityResidual(set.m, w.p()) < 1e-12);
    for (double v : w.p().data()) CHECK(v >= 0.0);
  }
}

TEST_CASE("rank-two bound") {
  const RealMatrix eq16 = OverlapMatrix(PlusMinusTwoBasis());
  const RankTwoDependency d = RankTwoBound(eq16);
  CHECK(d.x == 0.0);
  CHECK(d.bound == doctest::Approx(kTwoThirds).epsilon(1e-15));

  const ExactRankTwoDependency e = RankTwoBound(*RationalizeMatrix(eq16, 1000000, 1e-12));
  CHECK(e.x == 0);
  CHECK(e.bound == Rational(2, 3));

  // Column 0 is the midpoint of the other two: x = 1/2 and the bound is 1.
  const RationalMatrix mid = RationalMatrix::FromRows({{Rational(1, 3), Rational(2, 3), 0},
                                                       {Rational(1, 3), 0, Rational(2, 3)},
                                                       {Rational(1, 3), Rational(1, 3), Rational(1, 3)}});
  const ExactRankTwoDependency m2 = RankTwoBound(mid);
  CHECK(m2.a == 0);
  CHECK(m2.x == Rational(1, 2));
  CHECK(m2.bound == 1);
  CHECK(RankTwoBound(ToReal(mid)).bound == doctest::Approx(1.0));

  CHECK_THROWS_AS(RankTwoBound(RealMatrix::Identity(3)), PreconditionError);
  CHECK_THROWS_AS(RankTwoBound(RealMatrix(3, 3, 1.0 / 3)), PreconditionError);
  CHECK_THROWS_AS(RankTwoBound(RealMatrix::Identity(2)), PreconditionError);
}

TEST_CASE("restricted family") {
  const RealMatrix m = OverlapMatrix(PlusMinusTwoBasis());
  const RestrictedFamily f = MakeRestrictedFamily(m);
  CHECK(f.k_lower == doctest::Approx(-1.0 / 9));
  CHECK(f.k_upper == doctest::Approx(1.0 / 9));
  const RealMatrix zero = f.Member({0, 0, 0});
  CHECK(MaxAbsDiff(zero, RealMatrix(3, 3, 1.0 / 9)) == 0.0);
  for (int k = 0; k < 50; ++k) {
    CounterRng rng(10, k);
    std::vector<double> kv(3);
    for (double& v : kv) v = f.k_lower + (f.k_upper - f.k_lower) * rng.Uniform();
    const RealMatrix p = f.Member(kv);
    CHECK(StrongConditionResidual(m, p) < 1e-15);
    for (double v : p.data()) CHECK(v >= -1e-15);
  }
  const RestrictedOptimum best = OptimizeRestricted(PlusMinusTwoBasis(), f, Side::kU1);
  CHECK(best.qa == doctest::Approx(kTwoThirds).epsilon(1e-12));
}

TEST_CASE("exact optimum on the rank-two basis") {
  const ReferenceStates refs = MakeReferenceStates();
  const BimatrixGame g = DiceGame(3);
  for (Side side : {Side::kU1, Side::kU2}) {
    const OptimizationResult r = OptimizeWeights(PlusMinusTwoBasis(), side);
    REQUIRE(r.exact);
    REQUIRE(r.exact_qa.has_value());
    CHECK(*r.exact_qa == Rational(2, 3));
    CHECK(r.per_assignment_values.size() == 27);
    REQUIRE(r.bound.has_value());
    CHECK(*r.bound == doctest::Approx(kTwoThirds));
    CHECK(*r.x == 0.0);

    // Exact feasibility of the returned point.
    const RationalMatrix& p = *r.exact_p;
    const RationalMatrix m = *RationalizeMatrix(OverlapMatrix(PlusMinusTwoBasis()), 1000000, 1e-12);
    const RationalMatrix q = MatMul(MatMul(m, p), m.Transpose());
    for (const Rational& v : q.data()) CHECK(v == Rational(1, 9));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        CHECK(p(i, j) == p(j, i));
        CHECK(sgn(p(i, j)) >= 0);
      }
    CHECK_NOTHROW(WeightMatrix(r.best_p, 1e-12));
    CHECK(r.residual < 1e-15);

    // Consistent with the advantage at best_p and no worse than known points.
    CHECK(BestResponseFor(PlusMinusTwoBasis(), r.best_p, side, g).qa ==
          doctest::Approx(r.qa).epsilon(1e-9));
    CHECK(r.qa >= BestResponseFor(refs.n3_zero_discord, side, g).qa - 1e-9);
    CHECK(r.qa >= BestResponseFor(refs.n3_alternative, side, g).qa - 1e-9);
  }
}

TEST_CASE("optimum dominates sampled feasible points") {
  const OrthonormalBasis basis = PlusMinusTwoBasis();
  const FeasibleSet set = BuildFeasibleSet(basis);
  const OptimizationResult r = OptimizeWeights(basis, Side::kU1);
  for (int k = 0; k < 200; ++k) {
    CounterRng rng(17, k);
    const WeightMatrix w = SampleFeasible(set, rng);
    CHECK(r.qa >= BestResponseFor(basis, w.p(), Side::kU1, DiceGame(3)).qa - 1e-9);
  }
}

TEST_CASE("no advantage without rank deficiency") {
  for (int n = 2; n <= 5; ++n) {
    const OptimizationResult comp = OptimizeWeights(OrthonormalBasis::Computational(n), Side::kU1);
    CHECK(comp.qa == 0.0);
    CHECK(MaxAbsDiff(comp.best_p, RealMatrix(n, n, 1.0 / (n * n))) == 0.0);
    CHECK_FALSE(comp.bound.has_value());
  }
  for (int trial = 0; trial < 10; ++trial) {
    CounterRng rng(31, trial);
    const OptimizationResult r = OptimizeWeights(OrthonormalBasis::Random(3, rng), Side::kU2);
    CHECK(r.qa <= 1e-8);
    CHECK(r.qa >= -1e-12);
    CHECK_FALSE(r.exact);
    CHECK_FALSE(r.bound.has_value());
  }
  CHECK_THROWS_AS(OptimizeWeights(OrthonormalBasis::Computational(6), Side::kU1),
                  UnsupportedDimension);
}

TEST_CASE("floating-point path on an irrational rank-two basis") {
  const OrthonormalBasis basis = IrrationalRankTwoBasis();
  const FeasibleSet set = BuildFeasibleSet(basis);
  CHECK_FALSE(set.exact_m.has_value());
  CHECK(NumericalRank(set.m) == 2);
  CHECK_FALSE(set.singleton());
  for (Side side : {Side::kU1, Side::kU2}) {
    const OptimizationResult r = OptimizeWeights(basis, side);
    CHECK_FALSE(r.exact);
    CHECK(r.residual < 1e-9);
    CHECK(r.qa > 0.0);
    CHECK(BestResponseFor(basis, r.best_p, side, DiceGame(3)).qa ==
          doctest::Approx(r.qa).epsilon(1e-9));
    for (int k = 0; k < 100; ++k) {
      CounterRng rng(41, k);
      const WeightMatrix w = SampleFeasible(set, rng);
      CHECK(r.qa >= BestResponseFor(basis, w.p(), side, DiceGame(3)).qa - 1e-9);
    }
  }
}

TEST_CASE("thread count does not change the result") {
  const OptimizationResult one = OptimizeWeights(PlusMinusTwoBasis(), Side::kU1, 1);
  const OptimizationResult many = OptimizeWeights(PlusMinusTwoBasis(), Side::kU1, 8);
  CHECK(one.per_assignment_values == many.per_assignment_values);
  CHECK(one.assignment == many.assignment);
  CHECK(*one.exact_p == *many.exact_p);

  const OrthonormalBasis irr = IrrationalRankTwoBasis();
  const OptimizationResult f1 = OptimizeWeights(irr, Side::kU2, 1);
  const OptimizationResult f8 = OptimizeWeights(irr, Side::kU2, 8);
  CHECK(f1.per_assignment_values == f8.per_assignment_values);
  CHECK(f1.best_p == f8.best_p);
}

}  // namespace
}  // namespace qgame
