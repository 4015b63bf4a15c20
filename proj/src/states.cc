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

#include "qgame/states.h"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qgame {

OrthonormalBasis::OrthonormalBasis(ComplexMatrix kets, double tol)
    : kets_(std::move(kets)) {
  if (!kets_.square() || kets_.rows() < 1) {
    throw InvalidInput("basis must consist of n kets of dimension n");
  }
  CheckFinite(kets_, "basis");
  const double gram_err =
      MaxAbsDiff(MatMul(Adjoint(kets_), kets_), ComplexMatrix::Identity(dim()));
  if (gram_err > tol) {
    throw InvalidInput("basis is not orthonormal (Gram error " +
                       std::to_string(gram_err) + ")");
  }
}

OrthonormalBasis OrthonormalBasis::Computational(int n) {
  return OrthonormalBasis(ComplexMatrix::Identity(n));
}

OrthonormalBasis OrthonormalBasis::Random(int n, CounterRng& rng) {
  return OrthonormalBasis(HaarUnitary(n, rng));
}

ComplexMatrix OrthonormalBasis::ket(int i) const {
  if (i < 0 || i >= dim()) throw DimensionError("ket index out of range");
  ComplexMatrix k(dim(), 1);
  for (int r = 0; r < dim(); ++r) k(r, 0) = kets_(r, i);
  return k;
}

void ValidateWeightTable(const RealMatrix& p, double tol) {
  if (!p.square() || p.rows() < 1) throw InvalidInput("weights must be n x n");
  CheckFinite(p, "weights");
  double total = 0.0;
  for (double x : p.data()) {
    if (x < -tol) throw InvalidInput("weights must be nonnegative");
    total += x;
  }
  if (std::abs(total - 1.0) > tol) throw InvalidInput("weights must sum to 1");
}

WeightMatrix::WeightMatrix(RealMatrix p, double tol) : p_(std::move(p)) {
  ValidateWeightTable(p_, tol);
  if (MaxAbsDiff(p_, p_.Transpose()) > tol) {
    throw InvalidInput("weights must be symmetric");
  }
}

WeightMatrix WeightMatrix::Symmetrized(const RealMatrix& p, double tol) {
  ValidateWeightTable(p, tol);
  return WeightMatrix(Scale(Add(p, p.Transpose()), 0.5), tol);
}

WeightMatrix WeightMatrix::Uniform(int n) {
  return WeightMatrix(RealMatrix(n, n, 1.0 / (n * n)));
}

ZeroDiscordState::ZeroDiscordState(OrthonormalBasis basis, WeightMatrix weights)
    : basis_(std::move(basis)), weights_(std::move(weights)) {
  if (basis_.dim() != weights_.dim()) {
    throw InvalidInput("basis and weight dimensions differ");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix rho, int dim_a, int dim_b, double tol)
    : rho_(std::move(rho)), dim_a_(dim_a), dim_b_(dim_b) {
  if (dim_a < 1 || dim_b < 1 || rho_.rows() != dim_a * dim_b || !rho_.square()) {
    throw InvalidInput("density matrix is not (dimA*dimB)-square");
  }
  CheckFinite(rho_, "density matrix");
  if (!IsHermitian(rho_, tol)) throw InvalidInput("density matrix is not Hermitian");
  const Complex tr = Trace(rho_);
  if (std::abs(tr - 1.0) > tol) throw InvalidInput("density matrix trace is not 1");
  const auto eig = HermitianEigen(rho_, tol);
  if (eig.eigenvalues.back() < -tol) {
    throw InvalidInput("density matrix is not positive semidefinite");
  }
}

DensityMatrix DensityMatrix::Pure(const ComplexMatrix& ket, int dim_a, int dim_b) {
  return DensityMatrix(Projector(ket), dim_a, dim_b);
}

DensityMatrix Materialize(const OrthonormalBasis& basis, const RealMatrix& weights) {
  ValidateWeightTable(weights);
  const int n = basis.dim();
  if (weights.rows() != n) throw InvalidInput("basis and weight dimensions differ");
  std::vector<ComplexMatrix> proj;
  for (int i = 0; i < n; ++i) proj.push_back(Projector(basis.ket(i)));
  ComplexMatrix rho(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double w = weights(i, j);
      if (w == 0.0) continue;
      const ComplexMatrix term = Kron(proj[i], proj[j]);
      for (size_t k = 0; k < rho.data().size(); ++k) rho.data()[k] += w * term.data()[k];
    }
  return DensityMatrix(std::move(rho), n, n);
}

DensityMatrix Materialize(const ZeroDiscordState& s) {
  return Materialize(s.basis(), s.weights().p());
}

std::vector<double> MarginalP1(const RealMatrix& weights) {
  std::vector<double> p1(weights.rows(), 0.0);
  for (int i = 0; i < weights.rows(); ++i)
    for (int j = 0; j < weights.cols(); ++j) p1[i] += weights(i, j);
  return p1;
}

std::vector<double> MarginalP1(const ZeroDiscordState& s) {
  return MarginalP1(s.weights().p());
}

ComplexMatrix ConditionalSigma(const OrthonormalBasis& basis,
                               const RealMatrix& weights, int i) {
  const int n = basis.dim();
  if (i < 0 || i >= n) throw DimensionError("outcome index out of range");
  double p1 = 0.0;
  for (int j = 0; j < n; ++j) p1 += weights(i, j);
  if (p1 <= kSupportThreshold) return Projector(BasisKet(n, 0));
  ComplexMatrix sigma(n, n);
  for (int j = 0; j < n; ++j) {
    const double w = weights(i, j) / p1;
    if (w == 0.0) continue;
    sigma = Add(sigma, Scale(Projector(basis.ket(j)), w));
  }
  return sigma;
}

DensityMatrix ConditionalSigma(const ZeroDiscordState& s, int i) {
  return DensityMatrix(ConditionalSigma(s.basis(), s.weights().p(), i), s.dim(), 1);
}

RealMatrix OverlapMatrix(const OrthonormalBasis& basis) {
  const int n = basis.dim();
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = std::norm(basis.matrix()(i, j));
  return m;
}

JointDistribution MeasureComputational(const DensityMatrix& rho) {
  RealMatrix q(rho.dim_a(), rho.dim_b());
  for (int i = 0; i < rho.dim_a(); ++i)
    for (int j = 0; j < rho.dim_b(); ++j) {
      const int k = i * rho.dim_b() + j;
      q(i, j) = rho.rho()(k, k).real();
    }
  return JointDistribution(std::move(q));
}

bool IsSwapSymmetric(const DensityMatrix& rho, double tol) {
  if (rho.dim_a() != rho.dim_b()) {
    throw DimensionError("swap symmetry needs equal subsystem dimensions");
  }
  const int n = rho.dim_a();
  const ComplexMatrix& r = rho.rho();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          if (std::abs(r(i * n + j, k * n + l) - r(j * n + i, l * n + k)) > tol) {
            return false;
          }
        }
  return true;
}

DensityMatrix ApplyLocal(const DensityMatrix& rho, const ComplexMatrix& op,
                         Subsystem side) {
  const ComplexMatrix full =
      side == Subsystem::kA ? Kron(op, ComplexMatrix::Identity(rho.dim_b()))
                            : Kron(ComplexMatrix::Identity(rho.dim_a()), op);
  if (full.rows() != rho.dim()) {
    throw DimensionError("local operator does not match the subsystem dimension");
  }
  return DensityMatrix(MatMul(MatMul(full, rho.rho()), Adjoint(full)),
                       rho.dim_a(), rho.dim_b());
}

ComplexMatrix KetPlus() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::FromRows({{s}, {s}});
}

ComplexMatrix KetMinus() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::FromRows({{s}, {-s}});
}

OrthonormalBasis PlusMinusTwoBasis() {
  const double s = 1.0 / std::sqrt(2.0);
  return OrthonormalBasis(
      ComplexMatrix::FromRows({{s, s, 0.0}, {s, -s, 0.0}, {0.0, 0.0, 1.0}}));
}

ReferenceStates MakeReferenceStates() {
  const ComplexMatrix k0 = BasisKet(2, 0);
  const ComplexMatrix k1 = BasisKet(2, 1);
  const ComplexMatrix plus = KetPlus();
  const ComplexMatrix minus = KetMinus();

  const ComplexMatrix psi = Scale(Add(Kron(plus, k0), Kron(minus, k1)),
                                  1.0 / std::sqrt(2.0));

  auto pp = [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return Kron(Projector(a), Projector(b));
  };
  ComplexMatrix discord = Add(Add(pp(plus, k0), pp(k0, plus)),
                              Add(pp(minus, k1), pp(k1, minus)));
  discord = Scale(discord, 0.25);
  ComplexMatrix rotated = Add(Add(pp(k0, k0), pp(plus, plus)),
                              Add(pp(k1, k1), pp(minus, minus)));
  rotated = Scale(rotated, 0.25);

  const RealMatrix p = Scale(
      RealMatrix::FromRows({{4.0, 0.0, 0.0}, {0.0, 0.0, 2.0}, {0.0, 2.0, 1.0}}),
      1.0 / 9.0);
  const RealMatrix alt = Scale(
      RealMatrix::FromRows({{2.0, 2.0, 0.0}, {0.0, 0.0, 2.0}, {1.0, 1.0, 1.0}}),
      1.0 / 9.0);

  return ReferenceStates{
      DensityMatrix::Pure(psi, 2, 2),
      DensityMatrix(discord, 2, 2),
      DensityMatrix(rotated, 2, 2),
      ZeroDiscordState(PlusMinusTwoBasis(), WeightMatrix(p)),
      alt,
      ZeroDiscordState(PlusMinusTwoBasis(), WeightMatrix::Symmetrized(alt)),
  };
}

namespace {

// Squared Frobenius norm of <b0|rho|b1> for the qubit basis
//   |b0> = cos(t/2)|0> + e^{i f} sin(t/2)|1>,
//   |b1> = -e^{-i f} sin(t/2)|0> + cos(t/2)|1>.
double OffDiagonalNorm2(const ComplexMatrix& rho, int dim_b, double theta,
                        double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex e = std::polar(1.0, phi);
  const Complex b0[2] = {c, e * s};
  const Complex b1[2] = {-std::conj(e) * s, c};
  double total = 0.0;
  for (int k = 0; k < dim_b; ++k)
    for (int l = 0; l < dim_b; ++l) {
      Complex v = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          v += std::conj(b0[a]) * rho(a * dim_b + k, b * dim_b + l) * b1[b];
      total += std::norm(v);
    }
  return total;
}

}  // namespace

double CqWitness(const DensityMatrix& rho, double tol, int grid) {
  if (rho.dim_a() != 2) {
    throw UnsupportedDimension("classical-quantum witness needs a qubit first system");
  }
  if (grid < 1) throw InvalidInput("witness grid must be at least 1");
  const int db = rho.dim_b();
  const ComplexMatrix& r = rho.rho();
  constexpr double kPi = std::numbers::pi;

  double best = OffDiagonalNorm2(r, db, 0.0, 0.0);
  double best_theta = 0.0, best_phi = 0.0;
  for (int t = 0; t <= grid; ++t) {
    const double theta = kPi * t / grid;
    for (int f = 0; f < grid; ++f) {
      const double phi = 2.0 * kPi * f / grid;
      const double v = OffDiagonalNorm2(r, db, theta, phi);
      if (v < best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }

  // Compass search on the smooth squared norm.
  double step = kPi / grid;
  const double min_step = std::max(tol, 1e-15) * 1e-3;
  while (step > min_step) {
    bool moved = false;
    const double cand[4][2] = {{best_theta + step, best_phi},
                               {best_theta - step, best_phi},
                               {best_theta, best_phi + step},
                               {best_theta, best_phi - step}};
    for (const auto& c : cand) {
      const double v = OffDiagonalNorm2(r, db, c[0], c[1]);
      if (v < best) {
        best = v;
        best_theta = c[0];
        best_phi = c[1];
        moved = true;
      }
    }
    if (!moved) step *= 0.5;
  }
  return std::sqrt(std::max(best, 0.0));
}

}  // namespace qgame
