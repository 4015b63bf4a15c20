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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>

#include "qgame/advantage.h"
#include "qgame/games.h"
#include "qgame/optimizer.h"
#include "qgame/states.h"

namespace qgame {
namespace {

constexpr double kTwoThirds = 2.0 / 3.0;
constexpr double kWitnessPositiveThreshold = 0.17;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

// {e^{ia}(|0> + e^{ip}|1>), e^{ib}(|0> - e^{ip}|1>)} / sqrt(2): M = J/2, so
// every symmetric P is feasible.
OrthonormalBasis RandomUnbiasedQubitBasis(CounterRng& rng) {
  const double tau = 2 * std::numbers::pi;
  const Complex a = std::polar(1.0, tau * rng.Uniform());
  const Complex b = std::polar(1.0, tau * rng.Uniform());
  const Complex p = std::polar(1.0, tau * rng.Uniform());
  const double s = 1 / std::sqrt(2.0);
  return OrthonormalBasis(ComplexMatrix::FromRows({{s * a, s * b}, {s * a * p, -s * b * p}}));
}

RealMatrix RandomSymmetricWeights(int n, CounterRng& rng) {
  RealMatrix p(n, n);
  double total = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double w = rng.Uniform();
      p(i, j) = p(j, i) = w;
      total += (i == j) ? w : 2 * w;
    }
  return Scale(p, 1.0 / total);
}

Outcome HeadlineN3() {
  const auto start = std::chrono::steady_clock::now();
  const AdvantageReport r = MakeAdvantageReport(MakeReferenceStates().n3_zero_discord, DiceGame(3));
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = std::abs(r.qa_side1 - kTwoThirds) <= 1e-9 &&
                    std::abs(r.qa_side2 - kTwoThirds) <= 1e-9 && secs < 1.0;
  return {pass, Fmt("qa_side1=%.17g qa_side2=%.17g runtime=%.4fs", r.qa_side1, r.qa_side2, secs)};
}

Outcome AlternativeWeights() {
  const ReferenceStates refs = MakeReferenceStates();
  const BimatrixGame g = DiceGame(3);
  const AdvantageReport sym = MakeAdvantageReport(refs.n3_alternative, g);
  const OrthonormalBasis basis = PlusMinusTwoBasis();
  const double v1 = BestResponseFor(basis, refs.n3_alternative_verbatim, Side::kU1, g).qa;
  const double v2 = BestResponseFor(basis, refs.n3_alternative_verbatim, Side::kU2, g).qa;
  const bool pass = std::abs(sym.qa_side1 - kTwoThirds) <= 1e-9 &&
                    std::abs(sym.qa_side2 - kTwoThirds) <= 1e-9;
  return {pass, Fmt("symmetrized qa_side1=%.17g qa_side2=%.17g; verbatim table (first system "
                    "measured) qa_side1=%.17g qa_side2=%.17g",
                    sym.qa_side1, sym.qa_side2, v1, v2)};
}

Outcome SingleQubitExamples() {
  const ReferenceStates refs = MakeReferenceStates();
  const BimatrixGame g = DiceGame(2);
  const double ent = StrategyPayoff(refs.entangled, Hadamard(), Subsystem::kA, Side::kU1, g);
  const double dis = StrategyPayoff(refs.discord, Hadamard(), Subsystem::kA, Side::kU1, g);
  const JointDistribution q = MeasureComputational(refs.discord_rotated);
  const double want[4] = {0.375, 0.125, 0.125, 0.375};
  double worst = std::max(std::abs(ent - 1.0), std::abs(dis - 0.5));
  for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(q(k / 2, k % 2) - want[k]));
  return {worst <= 1e-12,
          Fmt("entangled=%.17g discord=%.17g q=(%.6g,%.6g,%.6g,%.6g) max_err=%.3g", ent, dis,
              q(0, 0), q(0, 1), q(1, 0), q(1, 1), worst)};
}

Outcome UniqueCorrelatedEquilibrium() {
  const auto start = std::chrono::steady_clock::now();
  bool all = true;
  for (int n = 2; n <= 4; ++n) {
    const UniqueEquilibrium u = CePolytopeUnique(DiceGame(n));
    bool exact = u.unique && u.witness.has_value();
    if (exact) {
      for (const Rational& v : u.witness->data()) exact = exact && v == Rational(1, n * n);
    }
    all = all && exact;
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {all && secs < 30.0, Fmt("n=2,3,4 unique at J/n^2=%s runtime=%.3fs",
                                  all ? "yes" : "no", secs)};
}

Outcome FullRankBases() {
  double worst = 0;
  int non_singleton = 0;
  for (int n : {3, 4}) {
    for (int k = 0; k < 200; ++k) {
      CounterRng rng(kDefaultSeed + n, k);
      const FeasibleSet set = BuildFeasibleSet(OrthonormalBasis::Random(n, rng));
      if (!set.singleton()) ++non_singleton;
      const WeightMatrix p = SampleFeasible(set, rng);
      const AdvantageReport r = MakeAdvantageReport(ZeroDiscordState(set.basis, p), DiceGame(n));
      worst = std::max(worst, r.guaranteed);
    }
  }
  return {worst <= 1e-8 && non_singleton == 0,
          Fmt("400 bases, max guaranteed=%.3g, non-singleton feasible sets=%d", worst,
              non_singleton)};
}

Outcome QubitInstances() {
  double worst = 0;
  int with_freedom = 0;
  for (int k = 0; k < 500; ++k) {
    CounterRng rng(kDefaultSeed + 2, k);
    // Alternate Haar bases (P pinned to J/4) and unbiased ones (P free).
    const OrthonormalBasis basis =
        k % 2 == 0 ? OrthonormalBasis::Random(2, rng) : RandomUnbiasedQubitBasis(rng);
    const FeasibleSet set = BuildFeasibleSet(basis);
    if (!set.singleton()) ++with_freedom;
    const WeightMatrix p = SampleFeasible(set, rng);
    worst = std::max(worst,
                     MakeAdvantageReport(ZeroDiscordState(basis, p), DiceGame(2)).guaranteed);
  }
  return {worst <= 1e-8, Fmt("500 instances (%d with a non-trivial feasible set), max "
                             "guaranteed=%.3g",
                             with_freedom, worst)};
}

Outcome RankTwoBoundAttained() {
  const OrthonormalBasis basis = PlusMinusTwoBasis();
  const RealMatrix m = OverlapMatrix(basis);
  const ExactRankTwoDependency dep =
      RankTwoBound(*RationalizeMatrix(m, kOverlapMaxDenominator, 1e-12));
  const OptimizationResult u1 = OptimizeWeights(basis, Side::kU1);
  const OptimizationResult u2 = OptimizeWeights(basis, Side::kU2);
  const RestrictedOptimum restricted =
      OptimizeRestricted(basis, MakeRestrictedFamily(m), Side::kU1);
  const bool pass = dep.bound == Rational(2, 3) && u1.exact_qa && *u1.exact_qa == Rational(2, 3) &&
                    u2.exact_qa && *u2.exact_qa == Rational(2, 3);
  const double gap = u1.qa - restricted.qa;
  return {pass, Fmt("bound=%s x=%s optimum U1=%s U2=%s; restricted optimum=%.17g, gap to full "
                    "optimum=%.3g (%s)",
                    dep.bound.get_str().c_str(), dep.x.get_str().c_str(),
                    u1.exact_qa ? u1.exact_qa->get_str().c_str() : "n/a",
                    u2.exact_qa ? u2.exact_qa->get_str().c_str() : "n/a", restricted.qa, gap,
                    std::abs(gap) <= 1e-9 ? "equal" : "gap")};
}

Outcome OracleDominance() {
  const DensityMatrix rho = Materialize(MakeReferenceStates().n3_zero_discord);
  const BimatrixGame g = DiceGame(3);
  double best = -1e300;
  for (int k = 0; k < 1000; ++k) {
    CounterRng rng(kDefaultSeed, k);
    const ComplexMatrix u = HaarUnitary(3, rng);
    for (Subsystem where : {Subsystem::kA, Subsystem::kB}) {
      for (Side side : {Side::kU1, Side::kU2}) {
        best = std::max(best, StrategyPayoff(rho, u, where, side, g));
      }
    }
  }
  return {best <= kTwoThirds + 1e-9, Fmt("1000 unitaries, best payoff=%.17g", best)};
}

Outcome StructuralInvariants() {
  double measure_err = 0, stochastic_err = 0, ma_err = 0;
  int invalid = 0, uniform_count = 0;
  const OrthonormalBasis rank_two = PlusMinusTwoBasis();
  for (int k = 0; k < 500; ++k) {
    CounterRng rng(kDefaultSeed + 9, k);
    const int n = 2 + k % 3;
    OrthonormalBasis basis = OrthonormalBasis::Computational(n);
    RealMatrix p;
    switch (k % 4) {
      case 0:
      case 1:  // arbitrary state
        basis = OrthonormalBasis::Random(n, rng);
        p = RandomSymmetricWeights(n, rng);
        break;
      case 2:  // uniform measurement, pinned weights
        basis = OrthonormalBasis::Random(n, rng);
        p = RealMatrix(n, n, 1.0 / (n * n));
        break;
      default:  // uniform measurement with free weights
        basis = n == 3 ? rank_two : RandomUnbiasedQubitBasis(rng);
        p = SampleFeasible(BuildFeasibleSet(basis), rng).p();
    }
    const ZeroDiscordState s(basis, WeightMatrix(p));
    const int dim = s.dim();
    const DensityMatrix rho = Materialize(s);
    const RealMatrix m = OverlapMatrix(s.basis());
    const RealMatrix want = MatMul(MatMul(m, s.weights().p()), m.Transpose());
    const JointDistribution q = MeasureComputational(rho);
    bool uniform = true;
    for (int i = 0; i < dim; ++i) {
      double row = 0, col = 0;
      for (int j = 0; j < dim; ++j) {
        measure_err = std::max(measure_err, std::abs(q(i, j) - want(i, j)));
        uniform = uniform && std::abs(q(i, j) - 1.0 / (dim * dim)) <= 1e-10;
        row += m(i, j);
        col += m(j, i);
      }
      stochastic_err = std::max({stochastic_err, std::abs(row - 1), std::abs(col - 1)});
    }
    const bool valid = IsHermitian(rho.rho(), 1e-10) &&
                       std::abs(Trace(rho.rho()) - 1.0) <= 1e-10 &&
                       HermitianEigen(rho.rho()).eigenvalues.back() >= -1e-10 &&
                       IsSwapSymmetric(rho, 1e-10);
    if (!valid) ++invalid;
    if (uniform) {
      ++uniform_count;
      const RealMatrix ma = MatMul(m, AdvantageDeviationMatrix(s));
      for (double v : ma.data()) {
        ma_err = std::max(ma_err, std::abs(v));
      }
    }
  }
  const bool pass = measure_err <= 1e-10 && stochastic_err <= 1e-10 && invalid == 0 &&
                    ma_err <= 1e-10 && uniform_count > 0;
  return {pass, Fmt("500 states: measure err=%.3g, stochastic err=%.3g, invalid=%d, "
                    "uniform=%d with |M A| max=%.3g",
                    measure_err, stochastic_err, invalid, uniform_count, ma_err)};
}

Outcome Witness() {
  const double rotated = CqWitness(MakeReferenceStates().discord_rotated);
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    CounterRng rng(kDefaultSeed + 10, k);
    const ZeroDiscordState s(OrthonormalBasis::Random(2, rng),
                             WeightMatrix(RandomSymmetricWeights(2, rng)));
    worst = std::max(worst, CqWitness(Materialize(s)));
  }
  return {rotated > kWitnessPositiveThreshold && worst <= 1e-6,
          Fmt("rotated discord state residual=%.9g (threshold %.2f); zero-discord max=%.3g",
              rotated, kWitnessPositiveThreshold, worst)};
}

int Main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"n3 state advantage is 2/3 on both sides", HeadlineN3},
      {"symmetrized alternative weights give 2/3", AlternativeWeights},
      {"single-qubit payoffs and outcome distribution", SingleQubitExamples},
      {"dice game correlated equilibrium is unique", UniqueCorrelatedEquilibrium},
      {"no advantage on Haar-random bases, n=3,4", FullRankBases},
      {"no advantage for qubits", QubitInstances},
      {"rank-two bound 2/3 is attained", RankTwoBoundAttained},
      {"local unitaries never beat 2/3", OracleDominance},
      {"structural invariants", StructuralInvariants},
      {"classical-quantum witness", Witness},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %2d %s: %s [%.3fs]\n", o.pass ? "PASS" : "FAIL", index, c.name,
                o.detail.c_str(), secs);
  }
  std::printf("%d/%d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}

}  // namespace
}  // namespace qgame

int main() { return qgame::Main(); }
