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

// Symmetric zero-discord states
//
//   rho = sum_{i,j} p(i,j) |psi_i><psi_i| (x) |psi_j><psi_j|
//
// for an orthonormal basis {|psi_i>} and a symmetric nonnegative weight
// matrix P summing to one, together with general bipartite density matrices
// and the measurements the games need.

#ifndef QGAME_STATES_H_
#define QGAME_STATES_H_

#include <vector>

#include "qgame/games.h"
#include "qgame/numerics.h"
#include "qgame/random.h"

namespace qgame {

// Support threshold: marginal probabilities at or below it count as zero.
inline constexpr double kSupportThreshold = 1e-12;

class OrthonormalBasis {
 public:
  // Columns of `kets` are |psi_0>, ..., |psi_{n-1}>. Rejects (never
  // renormalizes) inputs whose Gram matrix is off the identity by > tol.
  explicit OrthonormalBasis(ComplexMatrix kets, double tol = kDefaultTol);

  static OrthonormalBasis Computational(int n);
  // Haar-uniform basis (columns of a Haar unitary).
  static OrthonormalBasis Random(int n, CounterRng& rng);

  int dim() const { return kets_.rows(); }
  ComplexMatrix ket(int i) const;
  // Unitary whose columns are the kets.
  const ComplexMatrix& matrix() const { return kets_; }

 private:
  ComplexMatrix kets_;
};

// Symmetric, nonnegative, sums to one.
class WeightMatrix {
 public:
  explicit WeightMatrix(RealMatrix p, double tol = kDefaultTol);
  // (P + P^T) / 2 of a nonnegative table summing to one.
  static WeightMatrix Symmetrized(const RealMatrix& p, double tol = kDefaultTol);
  static WeightMatrix Uniform(int n);

  int dim() const { return p_.rows(); }
  const RealMatrix& p() const { return p_; }
  double operator()(int i, int j) const { return p_(i, j); }

 private:
  RealMatrix p_;
};

// Nonnegative and summing to one; symmetry not required. This is the
// "one-sided" weight table used when a printed P is not symmetric.
void ValidateWeightTable(const RealMatrix& p, double tol = kDefaultTol);

class ZeroDiscordState {
 public:
  ZeroDiscordState(OrthonormalBasis basis, WeightMatrix weights);

  int dim() const { return basis_.dim(); }
  const OrthonormalBasis& basis() const { return basis_; }
  const WeightMatrix& weights() const { return weights_; }

 private:
  OrthonormalBasis basis_;
  WeightMatrix weights_;
};

// Hermitian, PSD and trace one (within tol) on C^dimA (x) C^dimB.
class DensityMatrix {
 public:
  DensityMatrix(ComplexMatrix rho, int dim_a, int dim_b, double tol = kDefaultTol);

  static DensityMatrix Pure(const ComplexMatrix& ket, int dim_a, int dim_b);

  const ComplexMatrix& rho() const { return rho_; }
  int dim_a() const { return dim_a_; }
  int dim_b() const { return dim_b_; }
  int dim() const { return rho_.rows(); }

 private:
  ComplexMatrix rho_;
  int dim_a_;
  int dim_b_;
};

DensityMatrix Materialize(const ZeroDiscordState& s);
// Same sum for a one-sided weight table (need not be swap symmetric).
DensityMatrix Materialize(const OrthonormalBasis& basis, const RealMatrix& weights);

// p1(i) = sum_j p(i, j).
std::vector<double> MarginalP1(const RealMatrix& weights);
std::vector<double> MarginalP1(const ZeroDiscordState& s);

// State of the second system given outcome i on the first:
// sum_j p(i,j)/p1(i) |psi_j><psi_j|, or |0><0| when p1(i) is zero.
ComplexMatrix ConditionalSigma(const OrthonormalBasis& basis,
                               const RealMatrix& weights, int i);
DensityMatrix ConditionalSigma(const ZeroDiscordState& s, int i);

// M(i, j) = |<i|psi_j>|^2; doubly stochastic.
RealMatrix OverlapMatrix(const OrthonormalBasis& basis);

// q(i, j) = <ij|rho|ij>.
JointDistribution MeasureComputational(const DensityMatrix& rho);

// || S rho S - rho ||_max <= tol for the swap S. Requires dimA == dimB.
bool IsSwapSymmetric(const DensityMatrix& rho, double tol = kDefaultTol);

// Applies `op` to one subsystem: (op (x) I) rho (op (x) I)^dagger or the
// B-side analogue. `op` must be square with the subsystem's dimension.
DensityMatrix ApplyLocal(const DensityMatrix& rho, const ComplexMatrix& op,
                         Subsystem side);

// Qubit bases used by the worked examples.
ComplexMatrix KetPlus();
ComplexMatrix KetMinus();

// {|+>, |->, |2>}.
OrthonormalBasis PlusMinusTwoBasis();

struct ReferenceStates {
  // (|+0> + |-1>)/sqrt(2).
  DensityMatrix entangled;
  // (|+><+|(x)|0><0| + |0><0|(x)|+><+| + |-><-|(x)|1><1| + |1><1|(x)|-><-|)/4.
  DensityMatrix discord;
  // `discord` after a Hadamard on the first qubit.
  DensityMatrix discord_rotated;
  // {|+>,|->,|2>} with P = [[4,0,0],[0,0,2],[0,2,1]]/9.
  ZeroDiscordState n3_zero_discord;
  // The asymmetric table [[2,2,0],[0,0,2],[1,1,1]]/9, stored verbatim.
  RealMatrix n3_alternative_verbatim;
  // Its symmetrization (P + P^T)/2 on the same basis.
  ZeroDiscordState n3_alternative;
};

ReferenceStates MakeReferenceStates();

inline constexpr int kDefaultWitnessGrid = 720;
// Residuals at or below this are reported as consistent with zero discord.
inline constexpr double kWitnessZeroThreshold = 1e-4;

// Classical-quantum witness for a qubit first system: the minimum, over
// first-system orthonormal bases {|b0>, |b1>}, of the Frobenius norm of the
// off-diagonal block <b0|rho|b1>. Bases are swept on a grid over the Bloch
// sphere (theta with grid + 1 points, phi with grid points) and the best
// point is refined by compass search. Zero iff rho is block diagonal in some
// first-system basis. Throws UnsupportedDimension unless dimA == 2.
double CqWitness(const DensityMatrix& rho, double tol = kDefaultTol,
                 int grid = kDefaultWitnessGrid);

}  // namespace qgame

#endif  // QGAME_STATES_H_
