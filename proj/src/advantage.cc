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

#include "qgame/advantage.h"

#include <algorithm>
#include <cmath>

#include "qgame/random.h"

namespace qgame {

std::string ToString(Side side) { return side == Side::kU1 ? "U1" : "U2"; }

Side ParseSide(const std::string& s) {
  if (s == "U1" || s == "u1") return Side::kU1;
  if (s == "U2" || s == "u2") return Side::kU2;
  throw InvalidInput("side must be U1 or U2, got '" + s + "'");
}

namespace {

std::vector<double> Diagonal(const ComplexMatrix& m) {
  std::vector<double> d(m.rows());
  for (int i = 0; i < m.rows(); ++i) d[i] = m(i, i).real();
  return d;
}

}  // namespace

NoAdvantageCheck NoAdvantageCondition(const ZeroDiscordState& s, double tol) {
  const int n = s.dim();
  const auto p1 = MarginalP1(s);
  NoAdvantageCheck out;
  for (int j = 0; j < n; ++j) {
    if (p1[j] <= kSupportThreshold) continue;
    const auto diag = Diagonal(ConditionalSigma(s.basis(), s.weights().p(), j));
    for (double d : diag) {
      out.worst_deviation = std::max(out.worst_deviation, std::abs(d - 1.0 / n));
    }
  }
  out.holds = out.worst_deviation <= tol;
  return out;
}

BestResponse BestResponseFor(const OrthonormalBasis& basis,
                             const RealMatrix& weights, Side side,
                             const BimatrixGame& game) {
  ValidateWeightTable(weights);
  const int n = basis.dim();
  if (weights.rows() != n || game.n() != n) {
    throw DimensionError("basis, weights and game dimensions differ");
  }
  if (!IsDiceGame(game)) {
    throw InvalidInput("measure-and-replace closed form needs the nI - J game");
  }
  BestResponse out;
  out.outcome_probabilities = MarginalP1(weights);
  for (int i = 0; i < n; ++i) {
    const auto diag = Diagonal(ConditionalSigma(basis, weights, i));
    // First index wins ties.
    int l = 0;
    for (int k = 1; k < n; ++k) {
      if (side == Side::kU1 ? diag[k] > diag[l] : diag[k] < diag[l]) l = k;
    }
    const double payoff =
        side == Side::kU1 ? n * diag[l] - 1.0 : 1.0 - n * diag[l];
    out.replacements.push_back(l);
    out.outcome_payoffs.push_back(payoff);
    out.qa += out.outcome_probabilities[i] * payoff;
  }
  return out;
}

BestResponse BestResponseFor(const ZeroDiscordState& s, Side side,
                             const BimatrixGame& game) {
  return BestResponseFor(s.basis(), s.weights().p(), side, game);
}

AdvantageReport MakeAdvantageReport(const ZeroDiscordState& s,
                                    const BimatrixGame& game, double tol) {
  const JointDistribution q = MeasureComputational(Materialize(s));
  if (q.rows() != game.n()) {
    throw DimensionError("state and game dimensions differ");
  }
  const EquilibriumCheck ce = IsCorrelatedEquilibrium(q, game, tol);
  if (!ce.holds) {
    throw NotAnEquilibrium(
        "measured distribution is not a correlated equilibrium (max violation " +
            std::to_string(ce.max_violation) + ")",
        ce.max_violation);
  }
  const BestResponse r1 = BestResponseFor(s, Side::kU1, game);
  const BestResponse r2 = BestResponseFor(s, Side::kU2, game);
  const NoAdvantageCheck cond = NoAdvantageCondition(s, tol);
  AdvantageReport rep;
  rep.qa_side1 = r1.qa;
  rep.qa_side2 = r2.qa;
  rep.guaranteed = std::min(r1.qa, r2.qa);
  rep.replacements_side1 = r1.replacements;
  rep.replacements_side2 = r2.replacements;
  rep.lemma2_holds = cond.holds;
  rep.worst_deviation = cond.worst_deviation;
  rep.m_rank = NumericalRank(OverlapMatrix(s.basis()));
  return rep;
}

RealMatrix AdvantageDeviationMatrix(const ZeroDiscordState& s) {
  const int n = s.dim();
  const auto p1 = MarginalP1(s);
  RealMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    const auto diag = Diagonal(ConditionalSigma(s.basis(), s.weights().p(), i));
    for (int j = 0; j < n; ++j) a(i, j) = p1[i] * (diag[j] - 1.0 / n);
  }
  return a;
}

double StrategyPayoff(const DensityMatrix& rho, const ComplexMatrix& local_op,
                      Subsystem op_side, Side payoff_side,
                      const BimatrixGame& game) {
  if (!IsUnitary(local_op)) throw InvalidInput("local operation is not unitary");
  if (rho.dim_a() != game.n() || rho.dim_b() != game.n()) {
    throw DimensionError("state and game dimensions differ");
  }
  const JointDistribution q = MeasureComputational(ApplyLocal(rho, local_op, op_side));
  const auto [v1, v2] = ExpectedPayoffs(q, game);
  return payoff_side == Side::kU1 ? v1 : v2;
}

double ClassicalDefense(const ZeroDiscordState& s, int samples,
                        std::uint64_t seed, double tol) {
  if (samples < 0) throw InvalidInput("sample count must be nonnegative");
  const NoAdvantageCheck cond = NoAdvantageCondition(s, tol);
  if (!cond.holds) {
    throw PreconditionError(
        "classical defense requires the no-advantage condition (worst deviation " +
        std::to_string(cond.worst_deviation) + ")");
  }
  const int n = s.dim();
  const DensityMatrix rho = Materialize(s);

  // Dephase the second system: keep only blocks with equal B indices.
  ComplexMatrix dephased(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        dephased(a * n + k, b * n + k) = rho.rho()(a * n + k, b * n + k);
  const DensityMatrix measured(std::move(dephased), n, n);

  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    CounterRng rng(seed, static_cast<std::uint64_t>(i));
    const ComplexMatrix u = HaarUnitary(n, rng);
    const JointDistribution q =
        MeasureComputational(ApplyLocal(measured, u, Subsystem::kA));
    double match = 0.0;
    for (int k = 0; k < n; ++k) match += q(k, k);
    worst = std::max(worst, std::abs(match - 1.0 / n));
  }
  return worst;
}

}  // namespace qgame
