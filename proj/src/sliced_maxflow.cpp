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

#include "slimap/sliced_maxflow.hpp"

#include "slimap/error.hpp"
#include "slimap/flow.hpp"

#include <numeric>

namespace slimap {

int AugmentedGraph::vertex_count() const { return std::accumulate(layer_sizes.begin(), layer_sizes.end(), 0); }

Digraph AugmentedGraph::digraph() const {
  const VertexIndexer index(layer_sizes);
  Digraph d{index.size(), {}};
  for (const AugmentedEdge& e : edges) d.arcs.emplace_back(index(e.tail), index(e.head));
  return d;
}

AugmentedGraph build_augmented(const CircularMapperGraph& g) {
  require_valid(g);
  AugmentedGraph ag;
  ag.n = g.n;
  const int m1 = g.n > 0 ? g.layer_sizes[0] : 0;
  ag.layer_sizes.push_back(1);
  for (int size : g.layer_sizes) ag.layer_sizes.push_back(size);
  ag.layer_sizes.push_back(m1);
  ag.layer_sizes.push_back(1);

  for (int j = 0; j < m1; ++j) {
    ag.edges.push_back({{0, 0}, {1, j}, EdgeOrigin::SourceStub, static_cast<std::size_t>(j)});
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (e.wrap) continue;
    ag.edges.push_back({{e.tail.layer + 1, e.tail.rank}, {e.head.layer + 1, e.head.rank}, EdgeOrigin::Interior, k});
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    if (!e.wrap) continue;
    ag.edges.push_back({{g.n, e.tail.rank}, {g.n + 1, e.head.rank}, EdgeOrigin::WrapCopy, k});
  }
  for (int j = 0; j < m1; ++j) {
    ag.edges.push_back({{g.n + 1, j}, {g.n + 2, 0}, EdgeOrigin::TargetStub, static_cast<std::size_t>(j)});
  }
  return ag;
}

namespace {

std::vector<std::size_t> stub_columns(const AugmentedGraph& ag, EdgeOrigin origin) {
  std::vector<std::size_t> cols(static_cast<std::size_t>(ag.layer_sizes[1]));
  for (std::size_t k = 0; k < ag.edges.size(); ++k) {
    if (ag.edges[k].origin == origin) cols[ag.edges[k].ref] = k;
  }
  return cols;
}

}  // namespace

LPProblem<Rational> assemble_lp(const AugmentedGraph& ag, const QVector& caps, LpOptions options) {
  for (const Rational& c : caps) {
    if (c < 0) throw Error(Errc::NegativeCapacity, "capacity " + to_string(c) + " is negative");
  }
  const VertexIndexer index(ag.layer_sizes);
  const int first_row_vertex = index(Vertex{1, 0});
  const int conservation_rows = index(Vertex{ag.n + 2, 0}) - first_row_vertex;
  const int m1 = ag.layer_sizes[1];
  const int rows = conservation_rows + (options.pairing ? m1 : 0);
  const auto vars = static_cast<Eigen::Index>(ag.edges.size());

  LPProblem<Rational> lp;
  lp.equalities = QMatrix::Zero(rows, vars);
  lp.rhs = QVector::Zero(rows);
  lp.objective = QVector::Zero(vars);
  lp.upper.assign(static_cast<std::size_t>(vars), std::nullopt);

  for (Eigen::Index k = 0; k < vars; ++k) {
    const AugmentedEdge& e = ag.edges[static_cast<std::size_t>(k)];
    const int tail_row = index(e.tail) - first_row_vertex;
    const int head_row = index(e.head) - first_row_vertex;
    if (tail_row >= 0 && tail_row < conservation_rows) lp.equalities(tail_row, k) -= 1;
    if (head_row >= 0 && head_row < conservation_rows) lp.equalities(head_row, k) += 1;
    switch (e.origin) {
      case EdgeOrigin::SourceStub:
        lp.objective(k) = 1;
        break;
      case EdgeOrigin::Interior:
      case EdgeOrigin::WrapCopy:
        lp.upper[static_cast<std::size_t>(k)] = caps(static_cast<Eigen::Index>(e.ref));
        break;
      case EdgeOrigin::TargetStub:
        break;
    }
  }
  if (options.pairing) {
    const auto sources = stub_columns(ag, EdgeOrigin::SourceStub);
    const auto targets = stub_columns(ag, EdgeOrigin::TargetStub);
    for (int j = 0; j < m1; ++j) {
      lp.equalities(conservation_rows + j, static_cast<Eigen::Index>(sources[static_cast<std::size_t>(j)])) = 1;
      lp.equalities(conservation_rows + j, static_cast<Eigen::Index>(targets[static_cast<std::size_t>(j)])) = -1;
    }
  }
  return lp;
}

QVector flow_from_adm(const CircularMapperGraph& g, const AugmentedGraph& ag, const QVector& point) {
  if (point.size() != static_cast<Eigen::Index>(ag.edges.size())) {
    throw Error(Errc::ConstraintViolation, "point has the wrong number of coordinates");
  }
  const LPProblem<Rational> lp = assemble_lp(ag, QVector::Zero(static_cast<Eigen::Index>(g.edge_count())));
  const QVector residual = lp.equalities * point;
  for (const Rational& r : residual) {
    if (r != 0) throw Error(Errc::ConstraintViolation, "point violates a conservation or pairing row");
  }
  QVector s(static_cast<Eigen::Index>(g.edge_count()));
  for (std::size_t k = 0; k < ag.edges.size(); ++k) {
    const AugmentedEdge& e = ag.edges[k];
    if (e.origin == EdgeOrigin::Interior || e.origin == EdgeOrigin::WrapCopy) {
      s(static_cast<Eigen::Index>(e.ref)) = point(static_cast<Eigen::Index>(k));
    }
  }
  return s;
}

QVector adm_from_flow(const CircularMapperGraph& g, const AugmentedGraph& ag, const QVector& s) {
  if (s.size() != static_cast<Eigen::Index>(g.edge_count()) || !is_flow(g, s)) {
    throw Error(Errc::ConstraintViolation, "assignment is not a circulation");
  }
  // Throughput Flow(s)(v^1_j) of each first-layer vertex.
  QVector through = QVector::Zero(g.n > 0 ? g.layer_sizes[0] : 0);
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    if (g.edges[k].tail.layer == 0) through(g.edges[k].tail.rank) += s(static_cast<Eigen::Index>(k));
  }
  QVector point(static_cast<Eigen::Index>(ag.edges.size()));
  for (std::size_t k = 0; k < ag.edges.size(); ++k) {
    const AugmentedEdge& e = ag.edges[k];
    point(static_cast<Eigen::Index>(k)) = (e.origin == EdgeOrigin::Interior || e.origin == EdgeOrigin::WrapCopy)
                                              ? s(static_cast<Eigen::Index>(e.ref))
                                              : through(static_cast<Eigen::Index>(e.ref));
  }
  return point;
}

SlicedMaxFlow sliced_max_flow(const CircularMapperGraph& g, const QVector& caps) {
  if (caps.size() != static_cast<Eigen::Index>(g.edge_count())) {
    throw Error(Errc::InvalidGraph, "capacity vector does not match the edge count");
  }
  const AugmentedGraph ag = build_augmented(g);
  const LPProblem<Rational> lp = assemble_lp(ag, caps);
  const LPSolution<Rational> sol = simplex_solve(lp);
  if (sol.status == LPStatus::Unbounded) throw Error(Errc::Unbounded, "sliced max flow LP reported unbounded");
  if (sol.status == LPStatus::Infeasible) throw Error(Errc::InternalInconsistency, "the zero flow should be feasible");

  SlicedMaxFlow out;
  out.value = sol.value;
  out.witness = flow_from_adm(g, ag, sol.point);
  out.stats = {lp.variable_count(), lp.constraint_count(), sol.pivots};
  if (!is_flow(g, out.witness) || !within_capacity(out.witness, caps) ||
      (g.n > 0 && sliced_flow_value(g, out.witness) != out.value)) {
    throw Error(Errc::InternalInconsistency, "LP witness does not certify the reported optimum");
  }
  return out;
}

Rational brute_force_max_flow(const CircularMapperGraph& g, const QVector& caps, std::size_t max_edges, LpOptions options) {
  if (caps.size() != static_cast<Eigen::Index>(g.edge_count())) {
    throw Error(Errc::InvalidGraph, "capacity vector does not match the edge count");
  }
  const AugmentedGraph ag = build_augmented(g);
  if (ag.edges.size() > max_edges) {
    throw Error(Errc::TooLarge, "augmented graph has " + std::to_string(ag.edges.size()) + " edges; the oracle cap is " +
                                    std::to_string(max_edges));
  }
  const auto result = enumerate_vertices(assemble_lp(ag, caps, options));
  if (result.status != LPStatus::Optimal) throw Error(Errc::InternalInconsistency, "oracle found no feasible vertex");
  return result.value;
}

}  // namespace slimap
