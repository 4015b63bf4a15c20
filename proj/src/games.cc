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

#include "qgame/games.h"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qgame {

BimatrixGame::BimatrixGame(RealMatrix u1, RealMatrix u2)
    : u1_(std::move(u1)), u2_(std::move(u2)), zero_sum_(false) {
  if (!u1_.square() || u1_.rows() < 1 || u1_.rows() != u2_.rows() ||
      u1_.cols() != u2_.cols()) {
    throw InvalidInput("game payoffs must both be n x n");
  }
  CheckFinite(u1_, "u1");
  CheckFinite(u2_, "u2");
  zero_sum_ = true;
  for (size_t k = 0; k < u1_.data().size(); ++k) {
    if (u2_.data()[k] != -u1_.data()[k]) {
      zero_sum_ = false;
      break;
    }
  }
}

JointDistribution::JointDistribution(RealMatrix q, double tol) : q_(std::move(q)) {
  if (q_.empty()) throw InvalidInput("joint distribution is empty");
  CheckFinite(q_, "joint distribution");
  double total = 0.0;
  for (double x : q_.data()) {
    if (x < -tol) throw InvalidInput("joint distribution has a negative entry");
    total += x;
  }
  if (std::abs(total - 1.0) > tol) {
    throw InvalidInput("joint distribution does not sum to 1");
  }
}

JointDistribution JointDistribution::Uniform(int n) {
  return JointDistribution(RealMatrix(n, n, 1.0 / (n * n)));
}

JointDistribution JointDistribution::PointMass(int n, int i, int j) {
  RealMatrix q(n, n);
  q(i, j) = 1.0;
  return JointDistribution(std::move(q));
}

JointDistribution JointDistribution::Product(std::span<const double> p1,
                                             std::span<const double> p2,
                                             double tol) {
  RealMatrix q(static_cast<int>(p1.size()), static_cast<int>(p2.size()));
  for (size_t i = 0; i < p1.size(); ++i)
    for (size_t j = 0; j < p2.size(); ++j)
      q(static_cast<int>(i), static_cast<int>(j)) = p1[i] * p2[j];
  return JointDistribution(std::move(q), tol);
}

BimatrixGame DiceGame(int n) {
  if (n < 2) throw InvalidInput("dice game needs n >= 2");
  RealMatrix u1(n, n, -1.0);
  for (int i = 0; i < n; ++i) u1(i, i) = n - 1.0;
  return BimatrixGame(u1, Scale(u1, -1.0));
}

bool IsDiceGame(const BimatrixGame& g, double tol) {
  const int n = g.n();
  if (n < 2) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double want = (i == j) ? n - 1.0 : -1.0;
      if (std::abs(g.u1()(i, j) - want) > tol) return false;
      if (std::abs(g.u2()(i, j) + want) > tol) return false;
    }
  return true;
}

std::pair<double, double> ExpectedPayoffs(const JointDistribution& q,
                                          const BimatrixGame& g) {
  if (q.rows() != g.n() || q.cols() != g.n()) {
    throw DimensionError("distribution and game dimensions differ");
  }
  double v1 = 0.0, v2 = 0.0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      v1 += q(i, j) * g.u1()(i, j);
      v2 += q(i, j) * g.u2()(i, j);
    }
  return {v1, v2};
}

EquilibriumCheck IsCorrelatedEquilibrium(const JointDistribution& q,
                                         const BimatrixGame& g, double tol) {
  if (q.rows() != g.n() || q.cols() != g.n()) {
    throw DimensionError("distribution and game dimensions differ");
  }
  const int n = g.n();
  double worst = 0.0;
  // Player 1 told i, deviates to i'.
  for (int i = 0; i < n; ++i)
    for (int ip = 0; ip < n; ++ip) {
      if (ip == i) continue;
      double gain = 0.0;
      for (int j = 0; j < n; ++j) gain += q(i, j) * (g.u1()(ip, j) - g.u1()(i, j));
      worst = std::max(worst, gain);
    }
  // Player 2 told j, deviates to j'.
  for (int j = 0; j < n; ++j)
    for (int jp = 0; jp < n; ++jp) {
      if (jp == j) continue;
      double gain = 0.0;
      for (int i = 0; i < n; ++i) gain += q(i, j) * (g.u2()(i, jp) - g.u2()(i, j));
      worst = std::max(worst, gain);
    }
  return {worst <= tol, worst};
}

bool IsNashEquilibrium(std::span<const double> p1, std::span<const double> p2,
                       const BimatrixGame& g, double tol) {
  const int n = g.n();
  if (static_cast<int>(p1.size()) != n || static_cast<int>(p2.size()) != n) {
    throw DimensionError("strategy vectors must have length n");
  }
  auto valid = [tol](std::span<const double> p) {
    double s = 0.0;
    for (double x : p) {
      if (x < -tol) return false;
      s += x;
    }
    return std::abs(s - 1.0) <= tol;
  };
  if (!valid(p1) || !valid(p2)) {
    throw InvalidInput("strategy vectors must be probability distributions");
  }
  // Payoff of each pure strategy against the opponent's mixture.
  std::vector<double> r1(n, 0.0), r2(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r1[i] += p2[j] * g.u1()(i, j);
      r2[j] += p1[i] * g.u2()(i, j);
    }
  const double best1 = *std::max_element(r1.begin(), r1.end());
  const double best2 = *std::max_element(r2.begin(), r2.end());
  for (int k = 0; k < n; ++k) {
    if (p1[k] > tol && r1[k] < best1 - tol) return false;
    if (p2[k] > tol && r2[k] < best2 - tol) return false;
  }
  return true;
}

Polytope CorrelatedEquilibriumPolytope(const BimatrixGame& g) {
  const int n = g.n();
  auto exact = [](double x) { return Rational(x); };
  Polytope p;
  p.num_vars = n * n;
  auto var = [n](int i, int j) { return i * n + j; };
  for (int k = 0; k < n * n; ++k) p.AddNonnegative(k);
  p.AddEquality(std::vector<Rational>(n * n, 1), 1);
  for (int i = 0; i < n; ++i)
    for (int ip = 0; ip < n; ++ip) {
      if (ip == i) continue;
      std::vector<Rational> c(n * n, 0);
      for (int j = 0; j < n; ++j) {
        c[var(i, j)] = exact(g.u1()(i, j)) - exact(g.u1()(ip, j));
      }
      p.AddInequality(std::move(c), 0);
    }
  for (int j = 0; j < n; ++j)
    for (int jp = 0; jp < n; ++jp) {
      if (jp == j) continue;
      std::vector<Rational> c(n * n, 0);
      for (int i = 0; i < n; ++i) {
        c[var(i, j)] = exact(g.u2()(i, j)) - exact(g.u2()(i, jp));
      }
      p.AddInequality(std::move(c), 0);
    }
  return p;
}

UniqueEquilibrium CePolytopeUnique(const BimatrixGame& g) {
  const int n = g.n();
  const Polytope p = CorrelatedEquilibriumPolytope(g);
  UniqueEquilibrium out;
  out.unique = true;
  RationalMatrix point(n, n);
  for (int k = 0; k < n * n; ++k) {
    out.ranges.push_back(CoordinateRangeOf(p, k));
    if (out.ranges.back().min != out.ranges.back().max) out.unique = false;
    point(k / n, k % n) = out.ranges.back().min;
  }
  if (out.unique) out.witness = std::move(point);
  return out;
}

}  // namespace qgame
