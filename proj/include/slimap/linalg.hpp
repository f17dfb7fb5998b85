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

// Exact Gauss-Jordan elimination for field-valued Eigen matrices. No pivoting
// heuristics: the first nonzero entry in a column is the pivot, which is only
// meaningful for exact scalar types such as Rational.

namespace slimap::linalg {

template <typename Scalar>
struct RowEchelon {
  MatrixX<Scalar> reduced;            // reduced row echelon form
  std::vector<Eigen::Index> pivots;   // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

template <typename Derived>
RowEchelon<typename Derived::Scalar> row_reduce(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  RowEchelon<Scalar> out{a, {}};
  MatrixX<Scalar>& m = out.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return row_reduce(a).rank();
}

/// Columns form a basis of {x : a x = 0}.
template <typename Derived>
MatrixX<typename Derived::Scalar> null_space(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto ech = row_reduce(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  MatrixX<Scalar> basis(n, n - ech.rank());
  Eigen::Index k = 0;
  for (Eigen::Index free = 0; free < n; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    VectorX<Scalar> v = VectorX<Scalar>::Zero(n);
    v(free) = Scalar(1);
    for (Eigen::Index r = 0; r < ech.rank(); ++r) {
      v(ech.pivots[static_cast<std::size_t>(r)]) = -ech.reduced(r, free);
    }
    basis.col(k++) = v;
  }
  return basis;
}

/// Unique solution of a square system, or nullopt when the matrix is singular.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve_square(const Eigen::MatrixBase<DerivedA>& a,
                                                               const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  if (n == 0) return VectorX<Scalar>(0);
  MatrixX<Scalar> aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto ech = row_reduce(aug);
  if (ech.rank() != n || ech.pivots.back() == n) return std::nullopt;
  return VectorX<Scalar>(ech.reduced.col(n));
}

/// Some particular solution of a x = b, or nullopt when inconsistent.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> particular_solution(const Eigen::MatrixBase<DerivedA>& a,
                                                                      const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  MatrixX<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto ech = row_reduce(aug);
  VectorX<Scalar> x = VectorX<Scalar>::Zero(a.cols());
  for (Eigen::Index r = 0; r < ech.rank(); ++r) {
    const Eigen::Index c = ech.pivots[static_cast<std::size_t>(r)];
    if (c == a.cols()) return std::nullopt;
    x(c) = ech.reduced(r, a.cols());
  }
  return x;
}

}  // namespace slimap::linalg
