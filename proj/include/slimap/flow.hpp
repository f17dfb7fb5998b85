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

#include "slimap/graph.hpp"
#include "slimap/rational.hpp"

#include <vector>

namespace slimap {

/// Signed incidence matrix: +1 at the head of each arc, -1 at its tail.
template <typename Scalar = Rational>
MatrixX<Scalar> incidence_matrix(const Digraph& d) {
  MatrixX<Scalar> m = MatrixX<Scalar>::Zero(d.vertex_count, static_cast<Eigen::Index>(d.arcs.size()));
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    const auto [tail, head] = d.arcs[k];
    m(head, static_cast<Eigen::Index>(k)) += Scalar(1);
    m(tail, static_cast<Eigen::Index>(k)) -= Scalar(1);
  }
  return m;
}

/// ds(v) = sum of s over In(v) minus sum over Out(v). Accepts any edge-indexed
/// vector expression.
template <typename Derived>
VectorX<typename Derived::Scalar> boundary(const Digraph& d, const Eigen::MatrixBase<Derived>& s) {
  using Scalar = typename Derived::Scalar;
  VectorX<Scalar> out = VectorX<Scalar>::Zero(d.vertex_count);
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    const auto [tail, head] = d.arcs[k];
    out(head) += s(static_cast<Eigen::Index>(k));
    out(tail) -= s(static_cast<Eigen::Index>(k));
  }
  return out;
}

template <typename Derived>
VectorX<typename Derived::Scalar> boundary(const CircularMapperGraph& g, const Eigen::MatrixBase<Derived>& s) {
  return boundary(to_digraph(g), s);
}

bool is_flow(const Digraph& d, const QVector& s);
bool is_flow(const CircularMapperGraph& g, const QVector& s);
bool is_nonnegative_flow(const CircularMapperGraph& g, const QVector& s);

struct FiberFlow {
  Rational in;
  Rational out;
  friend bool operator==(const FiberFlow&, const FiberFlow&) = default;
};

/// Total in- and out-flow over the vertices of one layer.
FiberFlow fiber_flow(const CircularMapperGraph& g, const QVector& s, int layer);

/// The common per-layer in-flow of a circulation. Throws NotAFlow when ds != 0,
/// InternalInconsistency if the per-layer values disagree.
Rational sliced_flow_value(const CircularMapperGraph& g, const QVector& s);

/// 0 <= s <= caps edge-wise.
bool within_capacity(const QVector& s, const QVector& caps);

/// Fundamental cycles of a depth-first spanning forest, one +-1 circulation per
/// non-tree edge (which carries +1). Roots are the lowest-index vertex of each
/// component; neighbors are visited in edge order.
std::vector<QVector> fundamental_cycles(const Digraph& d);
std::vector<QVector> cycle_space_basis(const CircularMapperGraph& g);

/// Exact rank over Q of the span of the given edge vectors.
Eigen::Index span_dimension(const std::vector<QVector>& vectors, Eigen::Index length);

}  // namespace slimap
