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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slimap {

/// Vertex v^layer_rank of a circular graph (0-based layer and rank).
struct Vertex {
  int layer = 0;
  int rank = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Directed edge between consecutive layers. `wrap` marks the n -> 1 edges.
struct Edge {
  Vertex tail;
  Vertex head;
  bool wrap = false;
  friend bool operator==(const Edge& a, const Edge& b) { return a.tail == b.tail && a.head == b.head; }
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.tail <=> b.tail; c != 0) return c;
    return a.head <=> b.head;
  }
};

struct GraphMetadata {
  std::string capacity_rule;          // e.g. "point_count", "user"
  std::vector<std::string> warnings;  // e.g. "EmptyLayer: layer 2"
};

/// Layered directed graph over the nerve cycle: layers 0..n-1, edges from
/// layer i to layer i+1 (mod n). Edges are kept sorted by (tail, head) and
/// `capacities` is indexed in that order.
struct CircularMapperGraph {
  int n = 0;
  std::vector<int> layer_sizes;
  std::vector<Edge> edges;
  QVector capacities;
  GraphMetadata metadata;

  std::size_t edge_count() const { return edges.size(); }
};

/// Edge written as (source layer, source rank, target rank); the target
/// layer is (layer + 1) mod n.
struct EdgeSpec {
  int layer = 0;
  int from = 0;
  int to = 0;
  Rational cap{1};
};

/// Builds a graph with canonical edge order. Does not validate; see validate().
CircularMapperGraph make_graph(std::vector<int> layer_sizes, const std::vector<EdgeSpec>& specs);

/// Same, from raw tail/head pairs (which may violate the layering rule).
CircularMapperGraph make_graph(std::vector<int> layer_sizes, std::vector<Edge> edges, QVector capacities);

/// Sorts edges (permuting capacities alongside) and recomputes wrap flags.
void canonicalize(CircularMapperGraph& g);

/// Flat vertex numbering in (layer, rank) order.
class VertexIndexer {
 public:
  explicit VertexIndexer(const std::vector<int>& layer_sizes);
  int operator()(const Vertex& v) const { return offsets_[static_cast<std::size_t>(v.layer)] + v.rank; }
  Vertex vertex(int index) const;
  int size() const { return offsets_.back(); }

 private:
  std::vector<int> offsets_;
};

int vertex_count(const CircularMapperGraph& g);
std::optional<std::size_t> find_edge(const CircularMapperGraph& g, const Vertex& tail, const Vertex& head);
std::size_t edge_index(const CircularMapperGraph& g, const EdgeSpec& spec);  // throws InvalidEdge

/// Plain directed multigraph on vertices 0..vertex_count-1.
struct Digraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head)
};

Digraph to_digraph(const CircularMapperGraph& g);
int connected_components(const Digraph& d);

struct ValidationIssue {
  std::string code;  // InvalidEdge, DuplicateEdge, NegativeCapacity, EmptyLayer, DanglingVertex, ...
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;
  bool ok() const { return errors.empty(); }
  bool has_warning(const std::string& code) const;
};

ValidationReport validate(const CircularMapperGraph& g);

/// Throws Error(InvalidGraph) listing the errors of validate(g), if any.
void require_valid(const CircularMapperGraph& g);

/// |E| - |V| + #components of the underlying undirected graph.
int cycle_rank(const CircularMapperGraph& g);
int cycle_rank(const Digraph& d);

// ---------------------------------------------------------------------------
// Unrolled windows.

/// Vertex v^{layer, deck}_rank of the unrolled graph.
struct WindowVertex {
  int layer = 0;
  int deck = 0;
  int rank = 0;
  friend auto operator<=>(const WindowVertex&, const WindowVertex&) = default;
};

/// Copy of base edge `base_edge` whose tail lies in deck `deck`.
struct WindowEdge {
  std::size_t base_edge = 0;
  int deck = 0;
  friend auto operator<=>(const WindowEdge&, const WindowEdge&) = default;
};

/// The part of the unrolled graph between (deck 0, layer 0) and (deck R,
/// layer n-1): decks 0..R, with wrap copies only for decks r < R.
class WindowGraph {
 public:
  WindowGraph(CircularMapperGraph base, int decks);

  const CircularMapperGraph& base() const { return base_; }
  int decks() const { return decks_; }  // R
  int deck_count() const { return decks_ + 1; }

  int vertex_count() const { return deck_count() * per_deck_; }
  int vertex_index(const WindowVertex& v) const;
  WindowVertex vertex(int index) const;
  bool contains(const WindowVertex& v) const;

  const std::vector<WindowEdge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::optional<std::size_t> edge_index(const WindowEdge& e) const;
  WindowVertex tail(const WindowEdge& e) const;
  WindowVertex head(const WindowEdge& e) const;

  /// Linear layer index deck * n + layer; edges go from level l to l + 1.
  int level(const WindowVertex& v) const { return v.deck * base_.n + v.layer; }
  int level_count() const { return deck_count() * base_.n; }

  /// p*C: every copy carries its base edge's capacity.
  QVector capacities() const;
  Digraph digraph() const;

 private:
  CircularMapperGraph base_;
  int decks_;
  int per_deck_;
  VertexIndexer indexer_;
  std::vector<WindowEdge> edges_;
};

/// Window of the unrolled graph over decks 0..R. Throws PreconditionViolated if R < 1.
WindowGraph unroll(const CircularMapperGraph& g, int decks);

/// The covering projection: forget the deck.
inline Vertex project(const WindowVertex& v) { return {v.layer, v.rank}; }
inline std::size_t project(const WindowEdge& e) { return e.base_edge; }

/// Deck transformation T_u. Throws OutOfWindow when the image leaves the window.
WindowVertex deck_transform(const WindowGraph& w, int u, const WindowVertex& v);
WindowEdge deck_transform(const WindowGraph& w, int u, const WindowEdge& e);

/// (u.q)(e) = q(T_u e), defined on the edges whose shift stays in the window.
/// Throws OutOfWindow when no edge has its shift in the window.
std::vector<std::optional<Rational>> deck_transform(const WindowGraph& w, int u, const QVector& q);

/// q(e) == q(T_1 e) wherever both are in the window. Needs R >= 1.
bool is_periodic(const WindowGraph& w, const QVector& q);

/// The base assignment s with q = p*s, or nullopt when q is not periodic.
std::optional<QVector> base_of(const WindowGraph& w, const QVector& q);

}  // namespace slimap
