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

// Small dense linear programs. The exact path runs the simplex method over
// GMP rationals; a double instantiation of the same code exists for bases
// whose overlap matrix has no exact rational form.

#ifndef QGAME_POLYTOPE_H_
#define QGAME_POLYTOPE_H_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "qgame/numerics.h"

namespace qgame {

// Always in canonical (reduced, positive denominator) form.
using Rational = mpq_class;
using RationalMatrix = DenseMatrix<Rational>;

Rational MakeRational(long numerator, long denominator);
std::string ToString(const Rational& r);
double ToDouble(const Rational& r);
RealMatrix ToReal(const RationalMatrix& m);
RationalMatrix MatMul(const RationalMatrix& a, const RationalMatrix& b);

// Best rational approximation with denominator <= max_denominator
// (continued fractions).
Rational Rationalize(double value, long max_denominator);

// Rationalizes every entry; returns nullopt unless each approximation is
// within tol of the original double.
std::optional<RationalMatrix> RationalizeMatrix(const RealMatrix& m,
                                                long max_denominator,
                                                double tol);

// Rank and kernel of a rational matrix by exact Gauss-Jordan elimination.
// The kernel columns are the standard free-variable basis (not orthonormal).
int ExactRank(const RationalMatrix& m);
RationalMatrix ExactNullSpace(const RationalMatrix& m);

template <typename T>
struct LinearConstraint {
  std::vector<T> coefficients;
  T rhs;
};

// {x : E x = e, G x >= g}; variables are free unless a constraint says
// otherwise.
template <typename T>
struct BasicPolytope {
  int num_vars = 0;
  std::vector<LinearConstraint<T>> equalities;
  std::vector<LinearConstraint<T>> inequalities;  // coefficients . x >= rhs

  void AddEquality(std::vector<T> coefficients, T rhs) {
    equalities.push_back({std::move(coefficients), std::move(rhs)});
  }
  void AddInequality(std::vector<T> coefficients, T rhs) {
    inequalities.push_back({std::move(coefficients), std::move(rhs)});
  }
  // x_index >= 0.
  void AddNonnegative(int index) {
    std::vector<T> c(num_vars, T(0));
    c.at(index) = T(1);
    AddInequality(std::move(c), T(0));
  }
};

// Maximize objective . x over the polytope.
template <typename T>
struct BasicLinearProgram {
  BasicPolytope<T> constraints;
  std::vector<T> objective;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
std::string ToString(LpStatus s);

template <typename T>
struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  T value{};
  std::vector<T> point;
  int pivots = 0;
};

using Polytope = BasicPolytope<Rational>;
using LinearProgram = BasicLinearProgram<Rational>;
using FloatPolytope = BasicPolytope<double>;
using FloatLinearProgram = BasicLinearProgram<double>;

// Two-phase tableau simplex with Bland's rule, so degenerate polytopes
// terminate. Equalities enter as pairs of opposite inequalities. Throws
// InvalidInput on inconsistent dimensions.
LpResult<Rational> SolveLp(const LinearProgram& lp);
// Same algorithm in double precision; entries with magnitude <= eps are
// treated as zero.
LpResult<double> SolveLp(const FloatLinearProgram& lp, double eps = 1e-11);

struct CoordinateRange {
  Rational min;
  Rational max;
};

// Exact extremes of x_index over a nonempty polytope. Throws
// PreconditionError if the polytope is empty or unbounded in that direction.
CoordinateRange CoordinateRangeOf(const Polytope& polytope, int index);

// Largest violation of any constraint by x (0 when feasible).
Rational MaxViolation(const Polytope& polytope, const std::vector<Rational>& x);
double MaxViolation(const FloatPolytope& polytope, const std::vector<double>& x);

}  // namespace qgame

#endif  // QGAME_POLYTOPE_H_
