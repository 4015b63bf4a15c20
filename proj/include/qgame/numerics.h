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

// Dense linear algebra for the small matrices used throughout the library
// (dimension 64 at most). Everything is row-major and value-semantic.

#ifndef QGAME_NUMERICS_H_
#define QGAME_NUMERICS_H_

#include <complex>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qgame/errors.h"

namespace qgame {

using Complex = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr int kDefaultKronCap = 64;

template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : DenseMatrix(rows, cols, T{}) {}
  DenseMatrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
      throw DimensionError("negative matrix dimension");
    }
    data_.assign(static_cast<size_t>(rows) * cols, fill);
  }
  DenseMatrix(int rows, int cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows < 0 || cols < 0 ||
        data_.size() != static_cast<size_t>(rows) * cols) {
      throw DimensionError("matrix data does not match its shape");
    }
  }

  static DenseMatrix FromRows(
      std::initializer_list<std::initializer_list<T>> rows) {
    std::vector<std::vector<T>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return FromRows(v);
  }
  static DenseMatrix FromRows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return DenseMatrix(0, 0);
    const int c = static_cast<int>(rows.front().size());
    DenseMatrix m(static_cast<int>(rows.size()), c);
    for (int i = 0; i < m.rows(); ++i) {
      if (static_cast<int>(rows[i].size()) != c) {
        throw DimensionError("ragged rows");
      }
      for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static DenseMatrix Identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }
  std::span<const T> row(int i) const {
    return std::span<const T>(data_).subspan(static_cast<size_t>(i) * cols_, cols_);
  }

  std::vector<T> Column(int j) const {
    std::vector<T> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  DenseMatrix Transpose() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = DenseMatrix<Complex>;
using RealMatrix = DenseMatrix<double>;

// Throws InvalidInput when any entry is NaN or infinite.
void CheckFinite(const ComplexMatrix& m, const std::string& what);
void CheckFinite(const RealMatrix& m, const std::string& what);

ComplexMatrix ToComplex(const RealMatrix& m);
// Real part; throws InvalidInput if some imaginary part exceeds tol.
RealMatrix RealPart(const ComplexMatrix& m, double tol = kDefaultTol);

ComplexMatrix MatMul(const ComplexMatrix& a, const ComplexMatrix& b);
RealMatrix MatMul(const RealMatrix& a, const RealMatrix& b);
ComplexMatrix Adjoint(const ComplexMatrix& m);
ComplexMatrix Add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix Scale(const ComplexMatrix& m, Complex s);
RealMatrix Add(const RealMatrix& a, const RealMatrix& b);
RealMatrix Scale(const RealMatrix& m, double s);
Complex Trace(const ComplexMatrix& m);
double Trace(const RealMatrix& m);

// Largest absolute entry of a - b.
double MaxAbsDiff(const ComplexMatrix& a, const ComplexMatrix& b);
double MaxAbsDiff(const RealMatrix& a, const RealMatrix& b);
double FrobeniusNorm(const ComplexMatrix& m);

// Kronecker product. The result may not exceed cap x cap.
ComplexMatrix Kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   int cap = kDefaultKronCap);

// Column vector from amplitudes, and |v><v| for a column vector v.
ComplexMatrix Ket(std::span<const Complex> amplitudes);
ComplexMatrix BasisKet(int dim, int index);
ComplexMatrix Projector(const ComplexMatrix& ket);
// <a|b> for column vectors.
Complex Inner(const ComplexMatrix& a, const ComplexMatrix& b);

bool IsHermitian(const ComplexMatrix& m, double tol = kDefaultTol);
bool IsUnitary(const ComplexMatrix& m, double tol = kDefaultTol);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

// Cyclic complex Jacobi. Throws InvalidInput for non-Hermitian input.
EigenDecomposition HermitianEigen(const ComplexMatrix& h,
                                  double tol = kDefaultTol);

// Pivot count of a row echelon form built with partial pivoting; pivots with
// magnitude <= tol are treated as zero. Tolerance-sensitive by nature.
int NumericalRank(const RealMatrix& m, double tol = kDefaultTol);

// Orthonormal basis of ker m, one vector per column (m.cols() - rank columns).
RealMatrix NullSpace(const RealMatrix& m, double tol = kDefaultTol);

enum class Subsystem { kA, kB };

// Reduces a (dim_a * dim_b)-square operator onto the `keep` subsystem.
ComplexMatrix PartialTrace(const ComplexMatrix& rho, int dim_a, int dim_b,
                           Subsystem keep);

// 2x2 Hadamard.
ComplexMatrix Hadamard();

}  // namespace qgame

#endif  // QGAME_NUMERICS_H_
