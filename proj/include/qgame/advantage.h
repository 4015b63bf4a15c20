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

// Quantum advantage in the dice game on a shared zero-discord state.
//
// The quantum player holds the first system. She measures it in the state's
// own basis {|psi_i>}, learns that the opponent holds sigma_i, and replaces
// her part by the computational state |l_i> that maximizes (payoff U1) or
// minimizes (payoff U2) <l|sigma_i|l>. Her expected payoff under that
// strategy is the quantum advantage (QA) over the classical equilibrium
// value 0.

#ifndef QGAME_ADVANTAGE_H_
#define QGAME_ADVANTAGE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "qgame/games.h"
#include "qgame/states.h"

namespace qgame {

// Which payoff matrix the quantum player ends up with.
enum class Side { kU1, kU2 };
std::string ToString(Side side);
Side ParseSide(const std::string& s);

struct BestResponse {
  double qa = 0.0;
  std::vector<int> replacements;           // l_i per first-system outcome i
  std::vector<double> outcome_payoffs;     // payoff given outcome i
  std::vector<double> outcome_probabilities;  // p1(i)
};

struct NoAdvantageCheck {
  bool holds = false;
  double worst_deviation = 0.0;  // max |<i|sigma_j|i> - 1/n| over supp(p1)
};

// <i|sigma_j|i> == 1/n for every i and every j in supp(p1), within tol.
// When the measurement is an equilibrium this is equivalent to QA == 0.
NoAdvantageCheck NoAdvantageCondition(const ZeroDiscordState& s,
                                      double tol = kDefaultTol);

// Measure-and-replace strategy. Ties go to the smallest index. The game must
// be DiceGame(n) (the closed form assumes nI - J payoffs); other games are
// rejected with InvalidInput.
BestResponse BestResponseFor(const ZeroDiscordState& s, Side side,
                             const BimatrixGame& game);
// Same for a weight table that need not be symmetric; the quantum player
// holds the first (row) system.
BestResponse BestResponseFor(const OrthonormalBasis& basis,
                             const RealMatrix& weights, Side side,
                             const BimatrixGame& game);

struct AdvantageReport {
  double qa_side1 = 0.0;
  double qa_side2 = 0.0;
  double guaranteed = 0.0;  // min of the two: the classical player takes side
  std::vector<int> replacements_side1;
  std::vector<int> replacements_side2;
  bool lemma2_holds = false;
  double worst_deviation = 0.0;
  int m_rank = 0;
};

// Throws NotAnEquilibrium when the computational-basis measurement of the
// state is not a correlated equilibrium of `game` (tolerance `tol`).
AdvantageReport MakeAdvantageReport(const ZeroDiscordState& s,
                                    const BimatrixGame& game,
                                    double tol = 1e-9);

// a(i, j) = p1(i) (<j|sigma_i|j> - 1/n). For uniform measurement M A = 0, so
// A = 0 whenever M is invertible.
RealMatrix AdvantageDeviationMatrix(const ZeroDiscordState& s);

// Expected payoff of the player holding `payoff_side` after `local_op` is
// applied to subsystem `op_side` and both systems are measured in the
// computational basis. Throws InvalidInput if local_op is not unitary.
double StrategyPayoff(const DensityMatrix& rho, const ComplexMatrix& local_op,
                      Subsystem op_side, Side payoff_side,
                      const BimatrixGame& game);

// The classical player measures the second system first; the quantum player
// then applies `samples` Haar unitaries (stream i of `seed` for sample i) to
// the first system. Returns max |P(outcomes agree) - 1/n|. Requires the
// no-advantage condition (PreconditionError otherwise).
double ClassicalDefense(const ZeroDiscordState& s, int samples,
                        std::uint64_t seed, double tol = 1e-9);

}  // namespace qgame

#endif  // QGAME_ADVANTAGE_H_
