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

#include "slimap/linalg.hpp"
#include "slimap/simplex.hpp"

#include <cstdint>
#include <vector>

namespace slimap {

template <typename Scalar>
struct EnumerationResult {
  LPStatus status = LPStatus::Infeasible;
  Scalar value{0};
  VectorX<Scalar> point;
  std::uint64_t active_sets = 0;      // square systems examined
  std::uint64_t feasible_vertices = 0;
};

/// Brute-force optimum of a bounded LP by visiting every basic solution.
///
/// Feasible points are x = x0 + N y with N a basis of ker(A). A vertex pins
/// d = dim ker(A) variables at a bound, so every d-subset of variables and
/// every lower/upper choice on it is solved exactly and kept when feasible.
/// The feasible region must be bounded (it is for every program assembled in
/// this library); unbounded objectives are not detected.
template <typename Scalar>
EnumerationResult<Scalar> enumerate_vertices(const LPProblem<Scalar>& lp) {
  EnumerationResult<Scalar> out;
  const auto x0_opt = linalg::particular_solution(lp.equalities, lp.rhs);
  if (!x0_opt) return out;
  const VectorX<Scalar> x0 = *x0_opt;
  const MatrixX<Scalar> kernel = linalg::null_space(lp.equalities);
  const Eigen::Index nx = lp.variable_count();
  const Eigen::Index d = kernel.cols();

  auto feasible = [&](const VectorX<Scalar>& x) {
    for (Eigen::Index j = 0; j < nx; ++j) {
      if (x(j) < Scalar(0)) return false;
      const auto& u = lp.upper[static_cast<std::size_t>(j)];
      if (u && x(j) > *u) return false;
    }
    return true;
  };
  auto consider = [&](const VectorX<Scalar>& x) {
    ++out.feasible_vertices;
    const Scalar v = lp.objective.dot(x);
    if (out.status != LPStatus::Optimal || v > out.value) {
      out.status = LPStatus::Optimal;
      out.value = v;
      out.point = x;
    }
  };

  if (d == 0) {
    ++out.active_sets;
    if (feasible(x0)) consider(x0);
    return out;
  }
  if (d > nx) return out;

  std::vector<Eigen::Index> subset(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) subset[static_cast<std::size_t>(k)] = k;
  for (;;) {
    MatrixX<Scalar> aug(d, 2 * d);
    aug.setZero();
    for (Eigen::Index r = 0; r < d; ++r) {
      aug.row(r).head(d) = kernel.row(subset[static_cast<std::size_t>(r)]);
      aug(r, d + r) = Scalar(1);
    }
    const auto ech = linalg::row_reduce(aug);
    const bool invertible = ech.rank() == d && ech.pivots.back() == d - 1;
    if (invertible) {
      const MatrixX<Scalar> inverse = ech.reduced.rightCols(d);
      // Each pinned variable sits at 0 or at its upper bound.
      std::vector<Eigen::Index> choices;
      for (Eigen::Index r = 0; r < d; ++r) {
        choices.push_back(lp.upper[static_cast<std::size_t>(subset[static_cast<std::size_t>(r)])] ? 2 : 1);
      }
      std::vector<Eigen::Index> pick(static_cast<std::size_t>(d), 0);
      for (;;) {
        ++out.active_sets;
        VectorX<Scalar> target(d);
        for (Eigen::Index r = 0; r < d; ++r) {
          const Eigen::Index j = subset[static_cast<std::size_t>(r)];
          const Scalar bound = pick[static_cast<std::size_t>(r)] == 0 ? Scalar(0) : *lp.upper[static_cast<std::size_t>(j)];
          target(r) = bound - x0(j);
        }
        const VectorX<Scalar> x = x0 + kernel * (inverse * target);
        if (feasible(x)) consider(x);
        Eigen::Index r = 0;
        while (r < d && ++pick[static_cast<std::size_t>(r)] == choices[static_cast<std::size_t>(r)]) {
          pick[static_cast<std::size_t>(r)] = 0;
          ++r;
        }
        if (r == d) break;
      }
    }
    // Next d-subset in lexicographic order.
    Eigen::Index k = d - 1;
    while (k >= 0 && subset[static_cast<std::size_t>(k)] == nx - d + k) --k;
    if (k < 0) break;
    ++subset[static_cast<std::size_t>(k)];
    for (Eigen::Index r = k + 1; r < d; ++r) subset[static_cast<std::size_t>(r)] = subset[static_cast<std::size_t>(r - 1)] + 1;
  }
  return out;
}

}  // namespace slimap
