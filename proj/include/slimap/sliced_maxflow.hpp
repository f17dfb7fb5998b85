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
#include "slimap/simplex.hpp"
#include "slimap/vertex_enumeration.hpp"

#include <cstddef>
#include <vector>

namespace slimap {

enum class EdgeOrigin { SourceStub, Interior, WrapCopy, TargetStub };

/// Edge of the augmented graph. `ref` is the base edge index for Interior
/// and WrapCopy edges, and the layer-0 rank j for stubs.
struct AugmentedEdge {
  Vertex tail;
  Vertex head;
  EdgeOrigin origin = EdgeOrigin::Interior;
  std::size_t ref = 0;
};

/// The circular graph cut open along its wrap edges. Layers are numbered
/// 0 (source), 1..n (copies of base layers 0..n-1), n+1 (second copy of base
/// layer 0) and n+2 (target). Edge order: source stubs, interior copies,
/// wrap copies, target stubs.
struct AugmentedGraph {
  int n = 0;                       // base layer count
  std::vector<int> layer_sizes;    // n + 3 entries
  std::vector<AugmentedEdge> edges;

  int vertex_count() const;
  Digraph digraph() const;
};

AugmentedGraph build_augmented(const CircularMapperGraph& g);

struct LpOptions {
  bool pairing = true;  // couple each source stub to its target stub
};

/// Rows: conservation at every vertex of layers 1..n+1, then (if enabled) one
/// pairing row per layer-0 rank. Bounds 0 <= x <= C on copies of base edges;
/// stubs are unbounded above. Objective: total flow out of the source.
/// Throws NegativeCapacity.
LPProblem<Rational> assemble_lp(const AugmentedGraph& ag, const QVector& caps, LpOptions options = {});

/// Push-forward of an admissible point to a circulation on the base graph.
/// Throws ConstraintViolation when `point` breaks an equality row.
QVector flow_from_adm(const CircularMapperGraph& g, const AugmentedGraph& ag, const QVector& point);

/// Pull-back of a circulation to an admissible point. Throws ConstraintViolation
/// when `s` is not a circulation.
QVector adm_from_flow(const CircularMapperGraph& g, const AugmentedGraph& ag, const QVector& s);

struct LpStats {
  Eigen::Index variables = 0;
  Eigen::Index constraints = 0;
  int pivots = 0;
};

struct SlicedMaxFlow {
  Rational value;
  QVector witness;  // circulation on the base graph
  LpStats stats;
};

/// Maximum sliced flow over nonnegative circulations bounded by `caps`.
SlicedMaxFlow sliced_max_flow(const CircularMapperGraph& g, const QVector& caps);
inline SlicedMaxFlow sliced_max_flow(const CircularMapperGraph& g) { return sliced_max_flow(g, g.capacities); }

/// Independent optimum by vertex enumeration of the same program. Throws
/// TooLarge when the augmented graph has more than `max_edges` edges.
Rational brute_force_max_flow(const CircularMapperGraph& g, const QVector& caps, std::size_t max_edges = 14,
                              LpOptions options = {});

}  // namespace slimap
