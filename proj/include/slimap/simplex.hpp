// Copyright 2026 The slimap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "slimap/rational.hpp"

#include <optional>
#include <vector>

namespace slimap {

/// maximize objective . x  subject to  equalities x = rhs,  0 <= x <= upper
/// (an absent upper bound means unbounded above).
template <typename Scalar>
struct LPProblem {
  MatrixX<Scalar> equalities;
  VectorX<Scalar> rhs;
  std::vector<std::optional<Scalar>> upper;
  VectorX<Scalar> objective;

  Eigen::Index variable_count() const { return objective.size(); }
  Eigen::Index constraint_count() const { return equalities.rows(); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LPSolution {
  LPStatus status = LPStatus::Infeasible;
  Scalar value{0};
  VectorX<Scalar> point;
  int pivots = 0;
};

namespace detail {

// Dense tableau for  max c.x, T x = rhs, x >= 0  with Bland's rule.
template <typename Scalar>
class Tableau {
 public:
  Tableau(MatrixX<Scalar> rows, std::vector<Eigen::Index> basis)
      : t_(std::move(rows)), basis_(std::move(basis)), obj_(VectorX<Scalar>::Zero(t_.cols())) {}

  // Installs the reduced-cost row for `cost` (one entry per column, rhs excluded).
  void set_objective(const VectorX<Scalar>& cost) {
    obj_.setZero();
    obj_.head(cost.size()) = -cost;
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      const Scalar c = cost(basis_[static_cast<std::size_t>(i)]);
      if (c != Scalar(0)) obj_ += c * t_.row(i).transpose();
    }
  }

  // Runs to optimality over columns [0, allowed). Returns false if unbounded.
  bool optimize(Eigen::Index allowed, int& pivots) {
    const Eigen::Index rhs = t_.cols() - 1;
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < allowed; ++j) {
        if (obj_(j) < Scalar(0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best{0};
      for (Eigen::Index i = 0; i < t_.rows(); ++i) {
        if (t_(i, enter) <= Scalar(0)) continue;
        const Scalar ratio = t_(i, rhs) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
      ++pivots;
    }
  }

  void pivot(Eigen::Index row, Eigen::Index col) {
    t_.row(row) /= Scalar(t_(row, col));
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == row || t_(i, col) == Scalar(0)) continue;
      const Scalar f = t_(i, col);
      t_.row(i) -= f * t_.row(row);
    }
    if (obj_(col) != Scalar(0)) {
      const Scalar f = obj_(col);
      obj_ -= f * t_.row(row).transpose();
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  const MatrixX<Scalar>& table() const { return t_; }
  const std::vector<Eigen::Index>& basis() const { return basis_; }
  Scalar value() const { return obj_(obj_.size() - 1); }

 private:
  MatrixX<Scalar> t_;
  std::vector<Eigen::Index> basis_;
  VectorX<Scalar> obj_;
};

}  // namespace detail

/// Two-phase primal simplex with Bland's rule. Upper bounds become explicit
/// rows x_j + w_j = u_j; every equality row gets an artificial variable.
/// Exact for exact scalar types; no tolerances.
template <typename Scalar>
LPSolution<Scalar> simplex_solve(const LPProblem<Scalar>& lp) {
  const Eigen::Index nx = lp.variable_count();
  const Eigen::Index m = lp.constraint_count();
  std::vector<Eigen::Index> bounded;
  for (Eigen::Index j = 0; j < nx; ++j) {
    if (lp.upper[static_cast<std::size_t>(j)]) bounded.push_back(j);
  }
  const auto nb = static_cast<Eigen::Index>(bounded.size());
  const Eigen::Index slack0 = nx;
  const Eigen::Index art0 = nx + nb;
  const Eigen::Index cols = nx + nb + m + 1;
  const Eigen::Index rhs = cols - 1;

  LPSolution<Scalar> sol;
  for (Eigen::Index k = 0; k < nb; ++k) {
    if (*lp.upper[static_cast<std::size_t>(bounded[static_cast<std::size_t>(k)])] < Scalar(0)) return sol;
  }

  MatrixX<Scalar> t = MatrixX<Scalar>::Zero(m + nb, cols);
  std::vector<Eigen::Index> basis;
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool flip = lp.rhs(i) < Scalar(0);
    if (flip) {
      t.row(i).head(nx) = -lp.equalities.row(i);
      t(i, rhs) = -lp.rhs(i);
    } else {
      t.row(i).head(nx) = lp.equalities.row(i);
      t(i, rhs) = lp.rhs(i);
    }
    t(i, art0 + i) = Scalar(1);
    basis.push_back(art0 + i);
  }
  for (Eigen::Index k = 0; k < nb; ++k) {
    t(m + k, bounded[static_cast<std::size_t>(k)]) = Scalar(1);
    t(m + k, slack0 + k) = Scalar(1);
    t(m + k, rhs) = *lp.upper[static_cast<std::size_t>(bounded[static_cast<std::size_t>(k)])];
    basis.push_back(slack0 + k);
  }

  detail::Tableau<Scalar> tab(std::move(t), std::move(basis));

  // Phase 1: maximize -(sum of artificials).
  VectorX<Scalar> phase1 = VectorX<Scalar>::Zero(cols - 1);
  phase1.segment(art0, m).setConstant(Scalar(-1));
  tab.set_objective(phase1);
  tab.optimize(cols - 1, sol.pivots);
  if (tab.value() < Scalar(0)) return sol;

  // Drive zero-level artificials out of the basis where possible; rows where
  // that is impossible are redundant and stay inert.
  for (Eigen::Index i = 0; i < tab.table().rows(); ++i) {
    if (tab.basis()[static_cast<std::size_t>(i)] < art0) continue;
    for (Eigen::Index j = 0; j < art0; ++j) {
      if (tab.table()(i, j) != Scalar(0)) {
        tab.pivot(i, j);
        ++sol.pivots;
        break;
      }
    }
  }

  // Phase 2 over the structural and slack columns only.
  VectorX<Scalar> phase2 = VectorX<Scalar>::Zero(cols - 1);
  phase2.head(nx) = lp.objective;
  tab.set_objective(phase2);
  if (!tab.optimize(art0, sol.pivots)) {
    sol.status = LPStatus::Unbounded;
    return sol;
  }
  sol.status = LPStatus::Optimal;
  sol.value = tab.value();
  sol.point = VectorX<Scalar>::Zero(nx);
  for (Eigen::Index i = 0; i < tab.table().rows(); ++i) {
    const Eigen::Index b = tab.basis()[static_cast<std::size_t>(i)];
    if (b < nx) sol.point(b) = tab.table()(i, rhs);
  }
  return sol;
}

}  // namespace slimap
