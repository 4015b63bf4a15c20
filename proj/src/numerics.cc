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

#include "qgame/numerics.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qgame {
namespace {

template <typename T>
DenseMatrix<T> MatMulImpl(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  DenseMatrix<T> c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      if (aik == T{}) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <typename T>
void CheckSameShape(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrices have different shapes");
  }
}

}  // namespace

void CheckFinite(const ComplexMatrix& m, const std::string& what) {
  for (const Complex& z : m.data()) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw InvalidInput(what + ": non-finite entry");
    }
  }
}

void CheckFinite(const RealMatrix& m, const std::string& what) {
  for (double x : m.data()) {
    if (!std::isfinite(x)) throw InvalidInput(what + ": non-finite entry");
  }
}

ComplexMatrix ToComplex(const RealMatrix& m) {
  ComplexMatrix c(m.rows(), m.cols());
  std::copy(m.data().begin(), m.data().end(), c.data().begin());
  return c;
}

RealMatrix RealPart(const ComplexMatrix& m, double tol) {
  RealMatrix r(m.rows(), m.cols());
  for (size_t k = 0; k < m.data().size(); ++k) {
    if (std::abs(m.data()[k].imag()) > tol) {
      throw InvalidInput("matrix has a non-negligible imaginary part");
    }
    r.data()[k] = m.data()[k].real();
  }
  return r;
}

ComplexMatrix MatMul(const ComplexMatrix& a, const ComplexMatrix& b) {
  return MatMulImpl(a, b);
}

RealMatrix MatMul(const RealMatrix& a, const RealMatrix& b) {
  return MatMulImpl(a, b);
}

ComplexMatrix Adjoint(const ComplexMatrix& m) {
  ComplexMatrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = std::conj(m(i, j));
  return t;
}

ComplexMatrix Add(const ComplexMatrix& a, const ComplexMatrix& b) {
  CheckSameShape(a, b);
  ComplexMatrix c = a;
  for (size_t k = 0; k < c.data().size(); ++k) c.data()[k] += b.data()[k];
  return c;
}

ComplexMatrix Scale(const ComplexMatrix& m, Complex s) {
  ComplexMatrix c = m;
  for (Complex& z : c.data()) z *= s;
  return c;
}

RealMatrix Add(const RealMatrix& a, const RealMatrix& b) {
  CheckSameShape(a, b);
  RealMatrix c = a;
  for (size_t k = 0; k < c.data().size(); ++k) c.data()[k] += b.data()[k];
  return c;
}

RealMatrix Scale(const RealMatrix& m, double s) {
  RealMatrix c = m;
  for (double& x : c.data()) x *= s;
  return c;
}

Complex Trace(const ComplexMatrix& m) {
  if (!m.square()) throw DimensionError("trace of a non-square matrix");
  Complex t = 0.0;
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

double Trace(const RealMatrix& m) {
  if (!m.square()) throw DimensionError("trace of a non-square matrix");
  double t = 0.0;
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b) {
  CheckSameShape(a, b);
  double d = 0.0;
  for (size_t k = 0; k < a.data().size(); ++k) {
    d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
  }
  return d;
}

double MaxAbsDiff(const RealMatrix& a, const RealMatrix& b) {
  CheckSameShape(a, b);
  double d = 0.0;
  for (size_t k = 0; k < a.data().size(); ++k) {
    d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
  }
  return d;
}

double FrobeniusNorm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const Complex& z : m.data()) s += std::norm(z);
  return std::sqrt(s);
}

ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b, int cap) {
  const long rows = static_cast<long>(a.rows()) * b.rows();
  const long cols = static_cast<long>(a.cols()) * b.cols();
  if (rows > cap || cols > cap) {
    throw DimensionError("Kronecker product of size " + std::to_string(rows) +
                         "x" + std::to_string(cols) + " exceeds the cap of " +
                         std::to_string(cap));
  }
  ComplexMatrix k(static_cast<int>(rows), static_cast<int>(cols));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex{}) continue;
      for (int p = 0; p < b.rows(); ++p)
        for (int q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return k;
}

ComplexMatrix Ket(std::span<const Complex> amplitudes) {
  return ComplexMatrix(static_cast<int>(amplitudes.size()), 1,
                       std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
}

ComplexMatrix BasisKet(int dim, int index) {
  if (index < 0 || index >= dim) throw DimensionError("basis index out of range");
  ComplexMatrix k(dim, 1);
  k(index, 0) = 1.0;
  return k;
}

ComplexMatrix Projector(const ComplexMatrix& ket) {
  if (ket.cols() != 1) throw DimensionError("projector needs a column vector");
  return MatMul(ket, Adjoint(ket));
}

Complex Inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != 1 || b.cols() != 1 || a.rows() != b.rows()) {
    throw DimensionError("inner product needs column vectors of equal length");
  }
  Complex s = 0.0;
  for (int i = 0; i < a.rows(); ++i) s += std::conj(a(i, 0)) * b(i, 0);
  return s;
}

bool IsHermitian(const ComplexMatrix& m, double tol) {
  if (!m.square()) return false;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i; j < m.cols(); ++j)
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
  return true;
}

bool IsUnitary(const ComplexMatrix& m, double tol) {
  if (!m.square()) return false;
  return MaxAbsDiff(MatMul(Adjoint(m), m), ComplexMatrix::Identity(m.rows())) <=
         tol;
}

EigenDecomposition HermitianEigen(const ComplexMatrix& h, double tol) {
  if (!IsHermitian(h, tol)) {
    throw InvalidInput("eigendecomposition: matrix is not Hermitian");
  }
  const int n = h.rows();
  ComplexMatrix a = h;
  // Symmetrize so the rotations see an exactly Hermitian matrix.
  for (int i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (int j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  ComplexMatrix v = ComplexMatrix::Identity(n);

  const double scale = std::max(FrobeniusNorm(a), 1e-300);
  const double threshold = scale * 1e-15;
  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= threshold) break;

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= scale * 1e-18) continue;
        // Phase the pair into a real symmetric 2x2 block, then rotate.
        const Complex phase = a(p, q) / mag;  // e^{i alpha}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G acts on columns p, q:
        //   G_pp = c, G_pq = s, G_qp = -s conj(phase), G_qq = c conj(phase).
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * std::conj(phase);
        const Complex gqq = c * std::conj(phase);
        for (int k = 0; k < n; ++k) {  // a <- a G
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (int k = 0; k < n; ++k) {  // a <- G^H a
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (int k = 0; k < n; ++k) {  // v <- v G
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return a(x, x).real() > a(y, y).real();
  });
  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

namespace {

struct Echelon {
  RealMatrix reduced;        // reduced row echelon form
  std::vector<int> pivots;   // pivot column of each nonzero row
};

Echelon ReducedRowEchelon(const RealMatrix& m, double tol) {
  Echelon e{m, {}};
  RealMatrix& r = e.reduced;
  int row = 0;
  for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
    int best = row;
    for (int i = row + 1; i < r.rows(); ++i)
      if (std::abs(r(i, col)) > std::abs(r(best, col))) best = i;
    if (std::abs(r(best, col)) <= tol) {
      for (int i = row; i < r.rows(); ++i) r(i, col) = 0.0;
      continue;
    }
    if (best != row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r(row, j), r(best, j));
    const double pivot = r(row, col);
    for (int j = col; j < r.cols(); ++j) r(row, j) /= pivot;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0.0) continue;
      const double f = r(i, col);
      for (int j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

int NumericalRank(const RealMatrix& m, double tol) {
  return static_cast<int>(ReducedRowEchelon(m, tol).pivots.size());
}

RealMatrix NullSpace(const RealMatrix& m, double tol) {
  const Echelon e = ReducedRowEchelon(m, tol);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivots) is_pivot[c] = true;

  std::vector<std::vector<double>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<double> v(n, 0.0);
    v[free] = 1.0;
    for (size_t r = 0; r < e.pivots.size(); ++r) {
      v[e.pivots[r]] = -e.reduced(static_cast<int>(r), free);
    }
    // Modified Gram-Schmidt against the vectors already accepted.
    for (const auto& b : basis) {
      const double d = std::inner_product(v.begin(), v.end(), b.begin(), 0.0);
      for (int i = 0; i < n; ++i) v[i] -= d * b[i];
    }
    const double norm =
        std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
    for (double& x : v) x /= norm;
    basis.push_back(std::move(v));
  }

  RealMatrix out(n, static_cast<int>(basis.size()));
  for (size_t k = 0; k < basis.size(); ++k)
    for (int i = 0; i < n; ++i) out(i, static_cast<int>(k)) = basis[k][i];
  return out;
}

ComplexMatrix PartialTrace(const ComplexMatrix& rho, int dim_a, int dim_b,
                           Subsystem keep) {
  if (dim_a < 1 || dim_b < 1 || rho.rows() != dim_a * dim_b ||
      rho.cols() != dim_a * dim_b) {
    throw DimensionError("partial trace: operator is not (dimA*dimB)-square");
  }
  if (keep == Subsystem::kA) {
    ComplexMatrix out(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i)
      for (int j = 0; j < dim_a; ++j)
        for (int k = 0; k < dim_b; ++k)
          out(i, j) += rho(i * dim_b + k, j * dim_b + k);
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (int i = 0; i < dim_b; ++i)
    for (int j = 0; j < dim_b; ++j)
      for (int k = 0; k < dim_a; ++k)
        out(i, j) += rho(k * dim_b + i, k * dim_b + j);
  return out;
}

ComplexMatrix Hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return ComplexMatrix::FromRows({{s, s}, {s, -s}});
}

}  // namespace qgame
