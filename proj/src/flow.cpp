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

#include "slimap/flow.hpp"

#include "slimap/error.hpp"
#include "slimap/linalg.hpp"

#include <algorithm>

namespace slimap {

bool is_flow(const Digraph& d, const QVector& s) {
  if (s.size() != static_cast<Eigen::Index>(d.arcs.size())) return false;
  const QVector ds = boundary(d, s);
  return std::all_of(ds.begin(), ds.end(), [](const Rational& x) { return x == 0; });
}

bool is_flow(const CircularMapperGraph& g, const QVector& s) { return is_flow(to_digraph(g), s); }

bool is_nonnegative_flow(const CircularMapperGraph& g, const QVector& s) {
  return is_flow(g, s) && std::all_of(s.begin(), s.end(), [](const Rational& x) { return x >= 0; });
}

FiberFlow fiber_flow(const CircularMapperGraph& g, const QVector& s, int layer) {
  FiberFlow f{Rational(0), Rational(0)};
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (e.head.layer == layer) f.in += s(static_cast<Eigen::Index>(k));
    if (e.tail.layer == layer) f.out += s(static_cast<Eigen::Index>(k));
  }
  return f;
}

Rational sliced_flow_value(const CircularMapperGraph& g, const QVector& s) {
  if (!is_flow(g, s)) throw Error(Errc::NotAFlow, "assignment has nonzero boundary");
  if (g.n == 0) return Rational(0);
  const Rational value = fiber_flow(g, s, 0).in;
  for (int i = 0; i < g.n; ++i) {
    const FiberFlow f = fiber_flow(g, s, i);
    if (f.in != value || f.out != value) {
      throw Error(Errc::InternalInconsistency, "fiber flow differs between layers for a circulation");
    }
  }
  return value;
}

bool within_capacity(const QVector& s, const QVector& caps) {
  if (s.size() != caps.size()) return false;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s(k) < 0 || s(k) > caps(k)) return false;
  }
  return true;
}

std::vector<QVector> fundamental_cycles(const Digraph& d) {
  const auto nv = static_cast<std::size_t>(d.vertex_count);
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    incident[static_cast<std::size_t>(d.arcs[k].first)].push_back(k);
    if (d.arcs[k].second != d.arcs[k].first) incident[static_cast<std::size_t>(d.arcs[k].second)].push_back(k);
  }
  for (auto& list : incident) std::sort(list.begin(), list.end());

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(nv, none);
  std::vector<int> depth(nv, -1);
  std::vector<bool> tree_edge(d.arcs.size(), false);
  for (std::size_t root = 0; root < nv; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};  // (vertex, next incident slot)
    while (!stack.empty()) {
      auto& [v, slot] = stack.back();
      if (slot == incident[v].size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t k = incident[v][slot++];
      const auto [a, b] = d.arcs[k];
      const auto w = static_cast<std::size_t>(static_cast<std::size_t>(a) == v ? b : a);
      if (depth[w] >= 0) continue;
      depth[w] = depth[v] + 1;
      parent_edge[w] = k;
      tree_edge[k] = true;
      stack.emplace_back(w, 0);
    }
  }

  auto parent_of = [&](std::size_t v) {
    const auto [a, b] = d.arcs[parent_edge[v]];
    return static_cast<std::size_t>(static_cast<std::size_t>(a) == v ? b : a);
  };

  std::vector<QVector> cycles;
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    if (tree_edge[k]) continue;
    QVector c = QVector::Zero(static_cast<Eigen::Index>(d.arcs.size()));
    c(static_cast<Eigen::Index>(k)) = 1;
    // Close the cycle with the tree path from the head back to the tail:
    // climb from the head (traversal toward the root) and from the tail
    // (traversal away from the root) until they meet.
    auto x = static_cast<std::size_t>(d.arcs[k].second);
    auto y = static_cast<std::size_t>(d.arcs[k].first);
    while (x != y) {
      if (depth[x] >= depth[y]) {
        const std::size_t e = parent_edge[x];
        c(static_cast<Eigen::Index>(e)) += (static_cast<std::size_t>(d.arcs[e].first) == x) ? 1 : -1;
        x = parent_of(x);
      } else {
        const std::size_t e = parent_edge[y];
        c(static_cast<Eigen::Index>(e)) += (static_cast<std::size_t>(d.arcs[e].second) == y) ? 1 : -1;
        y = parent_of(y);
      }
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

std::vector<QVector> cycle_space_basis(const CircularMapperGraph& g) { return fundamental_cycles(to_digraph(g)); }

Eigen::Index span_dimension(const std::vector<QVector>& vectors, Eigen::Index length) {
  QMatrix m(static_cast<Eigen::Index>(vectors.size()), length);
  for (std::size_t r = 0; r < vectors.size(); ++r) m.row(static_cast<Eigen::Index>(r)) = vectors[r].transpose();
  return linalg::rank(m);
}

}  // namespace slimap
