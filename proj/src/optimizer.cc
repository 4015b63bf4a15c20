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

#include "qgame/optimizer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

namespace qgame {
namespace {

// Symmetric "unit" matrices E_ab (a <= b), in order (0,0), (0,1), ..., (n-1,n-1).
std::vector<std::pair<int, int>> SymmetricPairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) pairs.emplace_back(a, b);
  return pairs;
}

// Linear map from symmetric-pair coordinates to vec(M E M^T).
template <typename T>
DenseMatrix<T> SymmetricCongruenceMap(const DenseMatrix<T>& m) {
  const int n = m.rows();
  const auto pairs = SymmetricPairs(n);
  DenseMatrix<T> l(n * n, static_cast<int>(pairs.size()));
  for (size_t k = 0; k < pairs.size(); ++k) {
    const auto [a, b] = pairs[k];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        T v = m(i, a) * m(j, b);
        if (a != b) v += m(i, b) * m(j, a);
        l(i * n + j, static_cast<int>(k)) = v;
      }
  }
  return l;
}

template <typename T>
BasicPolytope<T> WeightPolytope(const DenseMatrix<T>& m) {
  const int n = m.rows();
  BasicPolytope<T> p;
  p.num_vars = n * n;
  for (int k = 0; k < n * n; ++k) p.AddNonnegative(k);
  const T target = T(1) / T(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<T> c(n * n, T(0));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) c[a * n + b] = m(i, a) * m(j, b);
      p.AddEquality(std::move(c), target);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<T> c(n * n, T(0));
      c[i * n + j] = T(1);
      c[j * n + i] = T(-1);
      p.AddEquality(std::move(c), T(0));
    }
  return p;
}

bool ExactlyDoublyStochastic(const RationalMatrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    Rational row = 0, col = 0;
    for (int j = 0; j < m.cols(); ++j) {
      if (sgn(m(i, j)) < 0) return false;
      row += m(i, j);
      col += m(j, i);
    }
    if (row != 1 || col != 1) return false;
  }
  return true;
}

bool DoublyStochastic(const RealMatrix& m, double tol) {
  if (!m.square()) return false;
  for (int i = 0; i < m.rows(); ++i) {
    double row = 0.0, col = 0.0;
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) < -tol) return false;
      row += m(i, j);
      col += m(j, i);
    }
    if (std::abs(row - 1.0) > tol || std::abs(col - 1.0) > tol) return false;
  }
  return true;
}

// Replacement assignment number `index`, l_0 most significant.
std::vector<int> Assignment(long index, int n) {
  std::vector<int> l(n);
  for (int i = n - 1; i >= 0; --i) {
    l[i] = static_cast<int>(index % n);
    index /= n;
  }
  return l;
}

long Power(int n, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= n;
  return r;
}

// Runs fn(k) for k in [0, count) on `threads` workers; rethrows the first
// failure by index.
template <typename Fn>
void ParallelFor(long count, int threads, Fn fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  threads = static_cast<int>(std::min<long>(threads, std::max<long>(count, 1)));
  std::vector<std::exception_ptr> errors(count);
  std::atomic<long> next{0};
  auto worker = [&] {
    for (long k = next++; k < count; k = next++) {
      try {
        fn(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double MostNegative(const RealMatrix& p) {
  double worst = 0.0;
  for (double v : p.data()) worst = std::min(worst, v);
  return -worst;
}

}  // namespace

FeasibleSet BuildFeasibleSet(const OrthonormalBasis& basis) {
  const int n = basis.dim();
  FeasibleSet set{basis, OverlapMatrix(basis), std::nullopt, std::nullopt,
                  FloatPolytope{}, RealMatrix(), 0};
  set.approximate = WeightPolytope(set.m);

  auto exact = RationalizeMatrix(set.m, kOverlapMaxDenominator, 1e-12);
  if (exact && ExactlyDoublyStochastic(*exact)) {
    set.exact_m = std::move(exact);
    set.exact = WeightPolytope(*set.exact_m);
  }

  const auto pairs = SymmetricPairs(n);
  RealMatrix coords;
  if (set.exact_m) {
    const RationalMatrix null = ExactNullSpace(SymmetricCongruenceMap(*set.exact_m));
    // Orthonormalize the exact null space in floating point.
    coords = NullSpace(ToReal(SymmetricCongruenceMap(*set.exact_m)));
    if (coords.cols() != null.cols()) {
      throw Error("exact and floating-point kernel dimensions disagree");
    }
  } else {
    coords = NullSpace(SymmetricCongruenceMap(set.m));
  }
  set.kernel_dim = coords.cols();
  set.kernel = RealMatrix(n * n, set.kernel_dim);
  for (int k = 0; k < set.kernel_dim; ++k)
    for (size_t q = 0; q < pairs.size(); ++q) {
      const auto [a, b] = pairs[q];
      const double v = coords(static_cast<int>(q), k);
      set.kernel(a * n + b, k) += v;
      if (a != b) set.kernel(b * n + a, k) += v;
    }
  return set;
}

double FeasibilityResidual(const RealMatrix& m, const RealMatrix& p) {
  const int n = m.rows();
  const RealMatrix q = MatMul(MatMul(m, p), m.Transpose());
  return MaxAbsDiff(q, RealMatrix(n, n, 1.0 / (n * n)));
}

double StrongConditionResidual(const RealMatrix& m, const RealMatrix& p) {
  const int n = m.rows();
  const RealMatrix bar = Add(p, RealMatrix(n, n, -1.0 / (n * n)));
  const RealMatrix r = MatMul(m, bar);
  double worst = 0.0;
  for (double v : r.data()) worst = std::max(worst, std::abs(v));
  return worst;
}

WeightMatrix SampleFeasible(const FeasibleSet& set, CounterRng& rng) {
  const int n = set.dim();
  RealMatrix p(n, n, 1.0 / (n * n));
  if (set.singleton()) return WeightMatrix(std::move(p));
  std::vector<double> dir(n * n, 0.0);
  for (int k = 0; k < set.kernel_dim; ++k) {
    const double t = rng.Normal();
    for (int e = 0; e < n * n; ++e) dir[e] += t * set.kernel(e, k);
  }
  double reach = std::numeric_limits<double>::infinity();
  for (int e = 0; e < n * n; ++e) {
    if (dir[e] < -1e-15) reach = std::min(reach, (1.0 / (n * n)) / -dir[e]);
  }
  // Kernel directions sum to zero, so some entry always decreases.
  if (!std::isfinite(reach)) reach = 0.0;
  const double step = rng.Uniform() * reach;
  for (int e = 0; e < n * n; ++e) {
    p.data()[e] = std::max(0.0, p.data()[e] + step * dir[e]);
  }
  // Restore exact symmetry after rounding.
  return WeightMatrix(Scale(Add(p, p.Transpose()), 0.5), 1e-9);
}

RankTwoDependency RankTwoBound(const RealMatrix& m, double tol) {
  if (m.rows() != 3 || m.cols() != 3) throw PreconditionError("rank-two bound needs a 3x3 matrix");
  if (!DoublyStochastic(m, tol)) throw PreconditionError("matrix is not doubly stochastic");
  if (NumericalRank(m, tol) != 2) throw PreconditionError("matrix rank is not 2");
  std::optional<RankTwoDependency> best;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    // m_a - m_c = x (m_b - m_c).
    double de = 0.0, ee = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double d = m(i, a) - m(i, c), e = m(i, b) - m(i, c);
      de += d * e;
      ee += e * e;
    }
    if (ee <= tol * tol) continue;
    double x = de / ee;
    double err = 0.0;
    for (int i = 0; i < 3; ++i) {
      err = std::max(err, std::abs(m(i, a) - m(i, c) - x * (m(i, b) - m(i, c))));
    }
    if (err > tol || x < -tol || x > 1.0 + tol) continue;
    x = std::clamp(x, 0.0, 1.0);
    RankTwoDependency dep{a, b, c, x, 1.0 / 3.0 + 1.0 / (3.0 * std::max(x, 1.0 - x))};
    if (dep.x > 0.5) {
      std::swap(dep.b, dep.c);
      dep.x = 1.0 - dep.x;
    }
    if (!best || dep.bound < best->bound) best = dep;
  }
  if (!best) throw PreconditionError("no convex column dependency found");
  return *best;
}

ExactRankTwoDependency RankTwoBound(const RationalMatrix& m) {
  if (m.rows() != 3 || m.cols() != 3) throw PreconditionError("rank-two bound needs a 3x3 matrix");
  if (!ExactlyDoublyStochastic(m)) throw PreconditionError("matrix is not doubly stochastic");
  if (ExactRank(m) != 2) throw PreconditionError("matrix rank is not 2");
  std::optional<ExactRankTwoDependency> best;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    Rational de = 0, ee = 0;
    for (int i = 0; i < 3; ++i) {
      const Rational d = m(i, a) - m(i, c), e = m(i, b) - m(i, c);
      de += d * e;
      ee += e * e;
    }
    if (sgn(ee) == 0) continue;
    Rational x = de / ee;
    bool exact = sgn(x) >= 0 && x <= 1;
    for (int i = 0; i < 3 && exact; ++i) {
      exact = m(i, a) - m(i, c) == x * (m(i, b) - m(i, c));
    }
    if (!exact) continue;
    ExactRankTwoDependency dep{a, b, c, x, 0};
    if (x > Rational(1, 2)) {
      std::swap(dep.b, dep.c);
      dep.x = 1 - x;
    }
    dep.bound = Rational(1, 3) + 1 / (3 * (1 - dep.x));
    dep.bound.canonicalize();
    if (!best || dep.bound < best->bound) best = dep;
  }
  if (!best) throw PreconditionError("no convex column dependency found");
  return *best;
}

RealMatrix RestrictedFamily::Member(const std::vector<double>& k) const {
  if (k.size() != 3) throw DimensionError("restricted family has 3 parameters");
  RealMatrix p(3, 3, 1.0 / 9.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p(i, j) += v[i] * k[j];
  return p;
}

RestrictedFamily MakeRestrictedFamily(const RealMatrix& m, double tol) {
  RestrictedFamily f;
  f.dependency = RankTwoBound(m, tol);
  const double x = f.dependency.x;
  f.v.assign(3, 0.0);
  f.v[f.dependency.a] = 1.0;
  f.v[f.dependency.b] = -x;
  f.v[f.dependency.c] = -(1.0 - x);
  f.k_lower = -1.0 / 9.0;
  f.k_upper = 1.0 / (9.0 * std::max(x, 1.0 - x));
  return f;
}

RestrictedOptimum OptimizeRestricted(const OrthonormalBasis& basis,
                                     const RestrictedFamily& family, Side side) {
  if (basis.dim() != 3) throw DimensionError("restricted family is 3x3");
  const BimatrixGame game = DiceGame(3);
  std::optional<RestrictedOptimum> best;
  for (int corner = 0; corner < 8; ++corner) {
    std::vector<double> k(3);
    for (int j = 0; j < 3; ++j) {
      k[j] = (corner >> (2 - j)) & 1 ? family.k_upper : family.k_lower;
    }
    RealMatrix p = family.Member(k);
    const double qa = BestResponseFor(basis, p, side, game).qa;
    if (!best || qa > best->qa + 1e-12) best = RestrictedOptimum{qa, k, std::move(p)};
  }
  return *best;
}

OptimizationResult OptimizeWeights(const OrthonormalBasis& basis, Side side,
                                   int threads) {
  const int n = basis.dim();
  if (n < 2 || n > kMaxOptimizerDim) {
    throw UnsupportedDimension("optimizer supports 2 <= n <= " +
                               std::to_string(kMaxOptimizerDim));
  }
  const FeasibleSet set = BuildFeasibleSet(basis);
  const long count = Power(n, n);
  const int isign = side == Side::kU1 ? 1 : -1;
  const double sign = isign;

  OptimizationResult out;
  out.side = side;
  out.per_assignment_values.assign(count, 0.0);

  if (n == 3 && NumericalRank(set.m) == 2) {
    try {
      const RankTwoDependency dep = RankTwoBound(set.m);
      out.bound = dep.bound;
      out.x = dep.x;
    } catch (const PreconditionError&) {
    }
  }

  if (set.singleton()) {
    // Only J/n^2 is feasible; every assignment evaluates there.
    out.best_p = RealMatrix(n, n, 1.0 / (n * n));
    for (long k = 0; k < count; ++k) {
      const auto l = Assignment(k, n);
      double s = 0.0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += out.best_p(i, j) * set.m(l[i], j);
      out.per_assignment_values[k] = sign * (n * s - 1.0);
    }
    out.exact = set.exact_m.has_value();
    if (out.exact) {
      out.exact_qa = Rational(0);
      RationalMatrix p(n, n, Rational(1, n * n));
      out.exact_p = std::move(p);
    }
  } else if (set.exact) {
    std::vector<LpResult<Rational>> results(count);
    const RationalMatrix& m = *set.exact_m;
    ParallelFor(count, threads, [&](long k) {
      const auto l = Assignment(k, n);
      LinearProgram lp{*set.exact, std::vector<Rational>(n * n, 0)};
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) lp.objective[i * n + j] = isign * n * m(l[i], j);
      results[k] = SolveLp(lp);
      if (results[k].status != LpStatus::kOptimal) {
        throw Error("assignment LP is " + ToString(results[k].status));
      }
      results[k].value -= isign;  // constant term
    });
    long best = 0;
    for (long k = 0; k < count; ++k) {
      out.per_assignment_values[k] = ToDouble(results[k].value);
      if (results[k].value > results[best].value) best = k;
    }
    RationalMatrix p(n, n);
    for (int e = 0; e < n * n; ++e) p.data()[e] = results[best].point[e];
    out.exact = true;
    out.exact_qa = results[best].value;
    out.best_p = ToReal(p);
    out.exact_p = std::move(p);
    out.assignment = Assignment(best, n);
  } else {
    // P = J/n^2 + sum_t t_k D_k with free t; only P >= 0 remains.
    const int dim = set.kernel_dim;
    FloatPolytope poly;
    poly.num_vars = dim;
    for (int a = 0; a < n; ++a)
      for (int b = a; b < n; ++b) {
        std::vector<double> c(dim);
        for (int k = 0; k < dim; ++k) c[k] = set.kernel(a * n + b, k);
        poly.AddInequality(std::move(c), -1.0 / (n * n));
      }
    std::vector<LpResult<double>> results(count);
    ParallelFor(count, threads, [&](long idx) {
      const auto l = Assignment(idx, n);
      FloatLinearProgram lp{poly, std::vector<double>(dim, 0.0)};
      for (int k = 0; k < dim; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) s += set.kernel(i * n + j, k) * set.m(l[i], j);
        lp.objective[k] = sign * n * s;
      }
      results[idx] = SolveLp(lp);
      if (results[idx].status != LpStatus::kOptimal) {
        throw Error("assignment LP is " + ToString(results[idx].status));
      }
    });
    long best = 0;
    for (long k = 0; k < count; ++k) {
      out.per_assignment_values[k] = results[k].value;
      if (results[k].value > results[best].value + 1e-12) best = k;
    }
    out.best_p = RealMatrix(n, n, 1.0 / (n * n));
    for (int k = 0; k < dim; ++k)
      for (int e = 0; e < n * n; ++e) {
        out.best_p.data()[e] += results[best].point[k] * set.kernel(e, k);
      }
    out.best_p = Scale(Add(out.best_p, out.best_p.Transpose()), 0.5);
    out.assignment = Assignment(best, n);
  }

  if (out.assignment.empty()) {
    // Singleton: report the smallest-index best responses at J/n^2.
    out.assignment = BestResponseFor(basis, out.best_p, side, DiceGame(n)).replacements;
  }
  if (out.exact_qa) {
    out.qa = ToDouble(*out.exact_qa);
  } else {
    out.qa = *std::max_element(out.per_assignment_values.begin(),
                               out.per_assignment_values.end());
  }
  out.residual = FeasibilityResidual(set.m, out.best_p) + MostNegative(out.best_p);
  return out;
}

}  // namespace qgame
