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

#include "qgame/polytope.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qgame {

Rational MakeRational(long numerator, long denominator) {
  if (denominator == 0) throw InvalidInput("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string ToString(const Rational& r) { return r.get_str(); }

double ToDouble(const Rational& r) { return r.get_d(); }

RealMatrix ToReal(const RationalMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (size_t k = 0; k < m.data().size(); ++k) out.data()[k] = m.data()[k].get_d();
  return out;
}

RationalMatrix MatMul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("rational matrix product");
  RationalMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Rational Rationalize(double value, long max_denominator) {
  if (!std::isfinite(value)) throw InvalidInput("cannot rationalize non-finite value");
  if (max_denominator < 1) throw InvalidInput("max_denominator must be >= 1");
  const Rational exact(value);  // every double is an exact dyadic rational
  const bool negative = sgn(exact) < 0;
  const Rational x = negative ? Rational(-exact) : exact;
  const mpz_class cap(max_denominator);
  if (x.get_den() <= cap) return exact;

  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  mpz_class n = x.get_num(), d = x.get_den();
  while (true) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    const mpz_class q2 = q0 + a * q1;
    if (q2 > cap) break;
    const mpz_class p2 = p0 + a * p1;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const mpz_class r = n - a * d;
    n = d;
    d = r;
  }
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), mpz_class(cap - q0).get_mpz_t(), q1.get_mpz_t());
  Rational bound1(mpz_class(p0 + k * p1), mpz_class(q0 + k * q1));
  Rational bound2(p1, q1);
  bound1.canonicalize();
  bound2.canonicalize();
  const Rational d1 = abs(bound1 - x);
  const Rational d2 = abs(bound2 - x);
  Rational best = (d2 <= d1) ? bound2 : bound1;
  return negative ? Rational(-best) : best;
}

std::optional<RationalMatrix> RationalizeMatrix(const RealMatrix& m,
                                                long max_denominator,
                                                double tol) {
  RationalMatrix out(m.rows(), m.cols());
  for (size_t k = 0; k < m.data().size(); ++k) {
    out.data()[k] = Rationalize(m.data()[k], max_denominator);
    if (std::abs(out.data()[k].get_d() - m.data()[k]) > tol) return std::nullopt;
  }
  return out;
}

namespace {

struct ExactEchelon {
  RationalMatrix reduced;
  std::vector<int> pivots;
};

ExactEchelon GaussJordan(const RationalMatrix& m) {
  ExactEchelon e{m, {}};
  RationalMatrix& r = e.reduced;
  int row = 0;
  for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
    int p = -1;
    for (int i = row; i < r.rows(); ++i)
      if (sgn(r(i, col)) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r(row, j), r(p, j));
    const Rational pivot = r(row, col);
    for (int j = col; j < r.cols(); ++j) r(row, j) /= pivot;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row || sgn(r(i, col)) == 0) continue;
      const Rational f = r(i, col);
      for (int j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

int ExactRank(const RationalMatrix& m) {
  return static_cast<int>(GaussJordan(m).pivots.size());
}

RationalMatrix ExactNullSpace(const RationalMatrix& m) {
  const ExactEchelon e = GaussJordan(m);
  const int n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RationalMatrix out(n, static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    const int f = free_cols[k];
    out(f, static_cast<int>(k)) = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r) {
      out(e.pivots[r], static_cast<int>(k)) = -e.reduced(static_cast<int>(r), f);
    }
  }
  return out;
}

std::string ToString(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "Optimal";
    case LpStatus::kInfeasible:
      return "Infeasible";
    case LpStatus::kUnbounded:
      return "Unbounded";
  }
  return "Unknown";
}

namespace {

int Sign(const Rational& x, double /*eps*/) { return sgn(x); }
int Sign(double x, double eps) { return x > eps ? 1 : (x < -eps ? -1 : 0); }

template <typename T>
void Validate(const BasicLinearProgram<T>& lp) {
  const int n = lp.constraints.num_vars;
  if (n < 1) throw InvalidInput("linear program needs at least one variable");
  if (static_cast<int>(lp.objective.size()) != n) {
    throw InvalidInput("objective length does not match the variable count");
  }
  auto check = [n](const std::vector<LinearConstraint<T>>& rows) {
    for (const auto& c : rows)
      if (static_cast<int>(c.coefficients.size()) != n) {
        throw InvalidInput("constraint length does not match the variable count");
      }
  };
  check(lp.constraints.equalities);
  check(lp.constraints.inequalities);
}

// Dense tableau over columns [structural | surplus | artificial | rhs].
template <typename T>
class Simplex {
 public:
  Simplex(const BasicLinearProgram<T>& lp, double eps) : eps_(eps) {
    const int n = lp.constraints.num_vars;

    // Singleton rows x_k >= 0 become sign restrictions on the variable.
    std::vector<bool> nonneg(n, false);
    std::vector<const LinearConstraint<T>*> rows;
    std::vector<bool> negate_copy;
    for (const auto& c : lp.constraints.inequalities) {
      int nz = 0, at = -1;
      for (int k = 0; k < n; ++k)
        if (Sign(c.coefficients[k], eps_) != 0) {
          ++nz;
          at = k;
        }
      if (nz == 1 && Sign(c.coefficients[at], eps_) > 0 && Sign(c.rhs, eps_) == 0) {
        nonneg[at] = true;
      } else {
        rows.push_back(&c);
        negate_copy.push_back(false);
      }
    }
    for (const auto& c : lp.constraints.equalities) {
      rows.push_back(&c);
      negate_copy.push_back(false);
      rows.push_back(&c);
      negate_copy.push_back(true);
    }

    pos_col_.assign(n, -1);
    neg_col_.assign(n, -1);
    int col = 0;
    for (int k = 0; k < n; ++k) {
      pos_col_[k] = col++;
      if (!nonneg[k]) neg_col_[k] = col++;
    }
    num_structural_ = col;
    const int m = static_cast<int>(rows.size());
    surplus_begin_ = num_structural_;
    artificial_begin_ = surplus_begin_ + m;

    std::vector<std::vector<T>> body(m);
    std::vector<T> rhs(m);
    int artificials = 0;
    std::vector<bool> needs_artificial(m, false);
    for (int i = 0; i < m; ++i) {
      std::vector<T> r(num_structural_ + m, T(0));
      for (int k = 0; k < n; ++k) {
        T a = rows[i]->coefficients[k];
        if (negate_copy[i]) a = -a;
        r[pos_col_[k]] = a;
        if (neg_col_[k] >= 0) r[neg_col_[k]] = -a;
      }
      T h = rows[i]->rhs;
      if (negate_copy[i]) h = -h;
      r[surplus_begin_ + i] = T(-1);
      if (Sign(h, eps_) <= 0) {
        for (T& x : r) x = -x;
        h = -h;
      } else {
        needs_artificial[i] = true;
        ++artificials;
      }
      body[i] = std::move(r);
      rhs[i] = h;
    }
    width_ = artificial_begin_ + artificials;
    tableau_.assign(m, std::vector<T>(width_ + 1, T(0)));
    basis_.assign(m, -1);
    int a = artificial_begin_;
    for (int i = 0; i < m; ++i) {
      std::copy(body[i].begin(), body[i].end(), tableau_[i].begin());
      tableau_[i][width_] = rhs[i];
      if (needs_artificial[i]) {
        tableau_[i][a] = T(1);
        basis_[i] = a++;
      } else {
        basis_[i] = surplus_begin_ + i;
      }
    }
    objective_.assign(num_structural_, T(0));
    for (int k = 0; k < n; ++k) {
      objective_[pos_col_[k]] = lp.objective[k];
      if (neg_col_[k] >= 0) objective_[neg_col_[k]] = -lp.objective[k];
    }
  }

  LpResult<T> Solve() {
    LpResult<T> result;
    const int m = static_cast<int>(tableau_.size());
    if (width_ > artificial_begin_) {
      std::vector<T> cost(width_, T(0));
      for (int j = artificial_begin_; j < width_; ++j) cost[j] = T(-1);
      Price(cost);
      allowed_end_ = width_;
      if (!Iterate()) throw Error("phase one reported unbounded");
      if (Sign(Value(), eps_) < 0) {
        result.status = LpStatus::kInfeasible;
        result.pivots = pivots_;
        return result;
      }
      // Drive remaining (zero-level) artificials out of the basis.
      for (int i = m - 1; i >= 0; --i) {
        if (basis_[i] < artificial_begin_) continue;
        int entering = -1;
        for (int j = 0; j < artificial_begin_; ++j)
          if (Sign(tableau_[i][j], eps_) != 0) {
            entering = j;
            break;
          }
        if (entering >= 0) {
          Pivot(i, entering);
        } else {
          tableau_.erase(tableau_.begin() + i);  // redundant row
          basis_.erase(basis_.begin() + i);
        }
      }
    }
    std::vector<T> cost(width_, T(0));
    std::copy(objective_.begin(), objective_.end(), cost.begin());
    Price(cost);
    allowed_end_ = artificial_begin_;
    if (!Iterate()) {
      result.status = LpStatus::kUnbounded;
      result.pivots = pivots_;
      return result;
    }

    std::vector<T> y(width_, T(0));
    for (size_t i = 0; i < basis_.size(); ++i) y[basis_[i]] = tableau_[i][width_];
    const int n = static_cast<int>(pos_col_.size());
    result.point.assign(n, T(0));
    for (int k = 0; k < n; ++k) {
      result.point[k] = y[pos_col_[k]];
      if (neg_col_[k] >= 0) result.point[k] -= y[neg_col_[k]];
    }
    result.status = LpStatus::kOptimal;
    result.value = Value();
    result.pivots = pivots_;
    return result;
  }

 private:
  T Value() const { return -reduced_[width_]; }

  // reduced_[j] = cost_j - sum_i cost_{basis(i)} * T[i][j]; reduced_[width]
  // holds minus the objective value.
  void Price(const std::vector<T>& cost) {
    reduced_.assign(width_ + 1, T(0));
    for (int j = 0; j < width_; ++j) reduced_[j] = cost[j];
    for (size_t i = 0; i < basis_.size(); ++i) {
      const T& cb = cost[basis_[i]];
      if (Sign(cb, 0.0) == 0) continue;
      for (int j = 0; j <= width_; ++j) reduced_[j] -= cb * tableau_[i][j];
    }
  }

  void Pivot(int r, int e) {
    std::vector<T>& prow = tableau_[r];
    const T p = prow[e];
    for (T& x : prow) x /= p;
    prow[e] = T(1);
    for (size_t i = 0; i < tableau_.size(); ++i) {
      if (static_cast<int>(i) == r) continue;
      std::vector<T>& row = tableau_[i];
      if (Sign(row[e], 0.0) == 0) continue;
      const T f = row[e];
      for (int j = 0; j <= width_; ++j) {
        if (Sign(prow[j], 0.0) != 0) row[j] -= f * prow[j];
      }
      row[e] = T(0);
    }
    if (Sign(reduced_[e], 0.0) != 0) {
      const T f = reduced_[e];
      for (int j = 0; j <= width_; ++j) {
        if (Sign(prow[j], 0.0) != 0) reduced_[j] -= f * prow[j];
      }
      reduced_[e] = T(0);
    }
    basis_[r] = e;
    ++pivots_;
  }

  // Bland's rule. Returns false when the objective is unbounded.
  bool Iterate() {
    constexpr int kMaxPivots = 200000;
    while (true) {
      int entering = -1;
      for (int j = 0; j < allowed_end_; ++j)
        if (Sign(reduced_[j], eps_) > 0) {
          entering = j;
          break;
        }
      if (entering < 0) return true;
      int leaving = -1;
      T best_ratio{};
      for (size_t i = 0; i < tableau_.size(); ++i) {
        if (Sign(tableau_[i][entering], eps_) <= 0) continue;
        const T ratio = tableau_[i][width_] / tableau_[i][entering];
        if (leaving < 0) {
          leaving = static_cast<int>(i);
          best_ratio = ratio;
          continue;
        }
        const int cmp = Sign(T(ratio - best_ratio), eps_);
        if (cmp < 0 || (cmp == 0 && basis_[i] < basis_[leaving])) {
          leaving = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return false;
      Pivot(leaving, entering);
      if (pivots_ > kMaxPivots) throw Error("simplex pivot limit exceeded");
    }
  }

  double eps_;
  std::vector<int> pos_col_;
  std::vector<int> neg_col_;
  int num_structural_ = 0;
  int surplus_begin_ = 0;
  int artificial_begin_ = 0;
  int width_ = 0;
  int allowed_end_ = 0;
  int pivots_ = 0;
  std::vector<std::vector<T>> tableau_;
  std::vector<int> basis_;
  std::vector<T> reduced_;
  std::vector<T> objective_;
};

template <typename T>
T Dot(const std::vector<T>& a, const std::vector<T>& b) {
  T s(0);
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

template <typename T>
T MaxViolationImpl(const BasicPolytope<T>& p, const std::vector<T>& x) {
  if (static_cast<int>(x.size()) != p.num_vars) {
    throw DimensionError("point length does not match the polytope");
  }
  T worst(0);
  for (const auto& c : p.equalities) {
    T d = Dot(c.coefficients, x) - c.rhs;
    if (d < 0) d = -d;
    if (d > worst) worst = d;
  }
  for (const auto& c : p.inequalities) {
    const T d = c.rhs - Dot(c.coefficients, x);
    if (d > worst) worst = d;
  }
  return worst;
}

}  // namespace

LpResult<Rational> SolveLp(const LinearProgram& lp) {
  Validate(lp);
  LpResult<Rational> r = Simplex<Rational>(lp, 0.0).Solve();
  if (r.status == LpStatus::kOptimal) r.value = Dot(lp.objective, r.point);
  return r;
}

LpResult<double> SolveLp(const FloatLinearProgram& lp, double eps) {
  Validate(lp);
  LpResult<double> r = Simplex<double>(lp, eps).Solve();
  if (r.status == LpStatus::kOptimal) r.value = Dot(lp.objective, r.point);
  return r;
}

CoordinateRange CoordinateRangeOf(const Polytope& polytope, int index) {
  if (index < 0 || index >= polytope.num_vars) {
    throw DimensionError("coordinate index out of range");
  }
  LinearProgram lp{polytope, std::vector<Rational>(polytope.num_vars, 0)};
  lp.objective[index] = 1;
  const auto hi = SolveLp(lp);
  if (hi.status != LpStatus::kOptimal) {
    throw PreconditionError("coordinate range: polytope is " + ToString(hi.status));
  }
  lp.objective[index] = -1;
  const auto lo = SolveLp(lp);
  if (lo.status != LpStatus::kOptimal) {
    throw PreconditionError("coordinate range: polytope is " + ToString(lo.status));
  }
  return {Rational(-lo.value), hi.value};
}

Rational MaxViolation(const Polytope& polytope, const std::vector<Rational>& x) {
  return MaxViolationImpl(polytope, x);
}

double MaxViolation(const FloatPolytope& polytope, const std::vector<double>& x) {
  return MaxViolationImpl(polytope, x);
}

}  // namespace qgame
