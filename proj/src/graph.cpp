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

#include "slimap/graph.hpp"

#include "slimap/error.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace slimap {

CircularMapperGraph make_graph(std::vector<int> layer_sizes, const std::vector<EdgeSpec>& specs) {
  const int n = static_cast<int>(layer_sizes.size());
  std::vector<Edge> edges;
  QVector caps(static_cast<Eigen::Index>(specs.size()));
  for (std::size_t k = 0; k < specs.size(); ++k) {
    const EdgeSpec& s = specs[k];
    edges.push_back({{s.layer, s.from}, {n == 0 ? 0 : (s.layer + 1) % n, s.to}, false});
    caps(static_cast<Eigen::Index>(k)) = s.cap;
  }
  return make_graph(std::move(layer_sizes), std::move(edges), std::move(caps));
}

CircularMapperGraph make_graph(std::vector<int> layer_sizes, std::vector<Edge> edges, QVector capacities) {
  CircularMapperGraph g;
  g.n = static_cast<int>(layer_sizes.size());
  g.layer_sizes = std::move(layer_sizes);
  g.edges = std::move(edges);
  g.capacities = std::move(capacities);
  canonicalize(g);
  return g;
}

void canonicalize(CircularMapperGraph& g) {
  if (g.capacities.size() != static_cast<Eigen::Index>(g.edges.size())) {
    throw Error(Errc::InvalidGraph, "capacity count does not match edge count");
  }
  std::vector<std::size_t> order(g.edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return g.edges[a] < g.edges[b]; });
  std::vector<Edge> edges;
  QVector caps(g.capacities.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    Edge e = g.edges[order[k]];
    e.wrap = (e.tail.layer == g.n - 1 && e.head.layer == 0);
    edges.push_back(e);
    caps(static_cast<Eigen::Index>(k)) = g.capacities(static_cast<Eigen::Index>(order[k]));
  }
  g.edges = std::move(edges);
  g.capacities = std::move(caps);
}

VertexIndexer::VertexIndexer(const std::vector<int>& layer_sizes) : offsets_(layer_sizes.size() + 1, 0) {
  for (std::size_t i = 0; i < layer_sizes.size(); ++i) offsets_[i + 1] = offsets_[i] + layer_sizes[i];
}

Vertex VertexIndexer::vertex(int index) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
  const int layer = static_cast<int>(it - offsets_.begin()) - 1;
  return {layer, index - offsets_[static_cast<std::size_t>(layer)]};
}

int vertex_count(const CircularMapperGraph& g) {
  return std::accumulate(g.layer_sizes.begin(), g.layer_sizes.end(), 0);
}

std::optional<std::size_t> find_edge(const CircularMapperGraph& g, const Vertex& tail, const Vertex& head) {
  const Edge probe{tail, head, false};
  const auto it = std::lower_bound(g.edges.begin(), g.edges.end(), probe);
  if (it == g.edges.end() || !(*it == probe)) return std::nullopt;
  return static_cast<std::size_t>(it - g.edges.begin());
}

std::size_t edge_index(const CircularMapperGraph& g, const EdgeSpec& spec) {
  const Vertex tail{spec.layer, spec.from};
  const Vertex head{g.n == 0 ? 0 : (spec.layer + 1) % g.n, spec.to};
  if (auto k = find_edge(g, tail, head)) return *k;
  throw Error(Errc::InvalidEdge, "no edge from layer " + std::to_string(spec.layer) + " rank " +
                                     std::to_string(spec.from) + " to rank " + std::to_string(spec.to));
}

Digraph to_digraph(const CircularMapperGraph& g) {
  const VertexIndexer index(g.layer_sizes);
  Digraph d{index.size(), {}};
  d.arcs.reserve(g.edges.size());
  for (const Edge& e : g.edges) d.arcs.emplace_back(index(e.tail), index(e.head));
  return d;
}

int connected_components(const Digraph& d) {
  std::vector<int> parent(static_cast<std::size_t>(d.vertex_count));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int components = d.vertex_count;
  for (const auto& [a, b] : d.arcs) {
    const int ra = find(a);
    const int rb = find(b);
    if (ra != rb) {
      parent[static_cast<std::size_t>(ra)] = rb;
      --components;
    }
  }
  return components;
}

bool ValidationReport::has_warning(const std::string& code) const {
  return std::any_of(warnings.begin(), warnings.end(), [&](const ValidationIssue& w) { return w.code == code; });
}

ValidationReport validate(const CircularMapperGraph& g) {
  ValidationReport report;
  auto error = [&](std::string code, std::string msg) { report.errors.push_back({std::move(code), std::move(msg)}); };
  if (g.n != static_cast<int>(g.layer_sizes.size())) {
    error("InvalidGraph", "n does not match the number of layer sizes");
    return report;
  }
  if (g.n < 1) error("InvalidGraph", "a circular graph needs at least one layer");
  for (int i = 0; i < g.n; ++i) {
    if (g.layer_sizes[static_cast<std::size_t>(i)] < 0) error("InvalidGraph", "negative layer size");
  }
  if (g.capacities.size() != static_cast<Eigen::Index>(g.edges.size())) {
    error("InvalidGraph", "capacity count does not match edge count");
    return report;
  }
  if (!report.ok()) return report;

  auto in_range = [&](const Vertex& v) {
    return v.layer >= 0 && v.layer < g.n && v.rank >= 0 && v.rank < g.layer_sizes[static_cast<std::size_t>(v.layer)];
  };
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    const std::string where = "edge " + std::to_string(k);
    if (!in_range(e.tail) || !in_range(e.head)) {
      error("InvalidEdge", where + " references a missing vertex");
    } else if (e.head.layer != (e.tail.layer + 1) % g.n) {
      error("InvalidEdge", where + " joins layer " + std::to_string(e.tail.layer + 1) + " to layer " +
                               std::to_string(e.head.layer + 1) + ", which are not consecutive");
    } else if (e.wrap != (e.tail.layer == g.n - 1 && e.head.layer == 0)) {
      error("InvalidEdge", where + " has an inconsistent wrap flag");
    }
    if (k > 0 && g.edges[k - 1] == e) error("DuplicateEdge", where + " repeats the previous edge");
    if (k > 0 && e < g.edges[k - 1]) error("InvalidGraph", "edges are not in canonical order");
    if (g.capacities(static_cast<Eigen::Index>(k)) < 0) error("NegativeCapacity", where + " has negative capacity");
  }
  if (!report.ok()) return report;

  const VertexIndexer index(g.layer_sizes);
  std::vector<int> in_degree(static_cast<std::size_t>(index.size()), 0);
  std::vector<int> out_degree(static_cast<std::size_t>(index.size()), 0);
  for (const Edge& e : g.edges) {
    ++out_degree[static_cast<std::size_t>(index(e.tail))];
    ++in_degree[static_cast<std::size_t>(index(e.head))];
  }
  for (int i = 0; i < g.n; ++i) {
    if (g.layer_sizes[static_cast<std::size_t>(i)] == 0) {
      report.warnings.push_back({"EmptyLayer", "layer " + std::to_string(i + 1) + " has no vertices"});
    }
  }
  for (int v = 0; v < index.size(); ++v) {
    if (in_degree[static_cast<std::size_t>(v)] == 0 || out_degree[static_cast<std::size_t>(v)] == 0) {
      const Vertex x = index.vertex(v);
      report.warnings.push_back({"DanglingVertex", "vertex (" + std::to_string(x.layer + 1) + "," +
                                                       std::to_string(x.rank + 1) + ") has no " +
                                                       (in_degree[static_cast<std::size_t>(v)] == 0 ? "incoming" : "outgoing") +
                                                       " edge; no flow passes through it"});
    }
  }
  return report;
}

void require_valid(const CircularMapperGraph& g) {
  const ValidationReport report = validate(g);
  if (report.ok()) return;
  std::string msg;
  for (const auto& e : report.errors) msg += (msg.empty() ? "" : "; ") + e.code + ": " + e.message;
  throw Error(Errc::InvalidGraph, msg);
}

int cycle_rank(const Digraph& d) {
  return static_cast<int>(d.arcs.size()) - d.vertex_count + connected_components(d);
}

int cycle_rank(const CircularMapperGraph& g) { return cycle_rank(to_digraph(g)); }

// ---------------------------------------------------------------------------

WindowGraph::WindowGraph(CircularMapperGraph base, int decks)
    : base_(std::move(base)), decks_(decks), per_deck_(slimap::vertex_count(base_)), indexer_(base_.layer_sizes) {
  for (int r = 0; r <= decks_; ++r) {
    for (std::size_t k = 0; k < base_.edges.size(); ++k) {
      if (base_.edges[k].wrap && r == decks_) continue;
      edges_.push_back({k, r});
    }
  }
}

int WindowGraph::vertex_index(const WindowVertex& v) const {
  return v.deck * per_deck_ + indexer_(Vertex{v.layer, v.rank});
}

WindowVertex WindowGraph::vertex(int index) const {
  const Vertex base = indexer_.vertex(index % per_deck_);
  return {base.layer, index / per_deck_, base.rank};
}

bool WindowGraph::contains(const WindowVertex& v) const {
  return v.deck >= 0 && v.deck <= decks_ && v.layer >= 0 && v.layer < base_.n && v.rank >= 0 &&
         v.rank < base_.layer_sizes[static_cast<std::size_t>(v.layer)];
}

std::optional<std::size_t> WindowGraph::edge_index(const WindowEdge& e) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e, [](const WindowEdge& a, const WindowEdge& b) {
    return std::tie(a.deck, a.base_edge) < std::tie(b.deck, b.base_edge);
  });
  if (it == edges_.end() || !(*it == e)) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

WindowVertex WindowGraph::tail(const WindowEdge& e) const {
  const Edge& b = base_.edges[e.base_edge];
  return {b.tail.layer, e.deck, b.tail.rank};
}

WindowVertex WindowGraph::head(const WindowEdge& e) const {
  const Edge& b = base_.edges[e.base_edge];
  return {b.head.layer, b.wrap ? e.deck + 1 : e.deck, b.head.rank};
}

QVector WindowGraph::capacities() const {
  QVector caps(static_cast<Eigen::Index>(edges_.size()));
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    caps(static_cast<Eigen::Index>(k)) = base_.capacities(static_cast<Eigen::Index>(edges_[k].base_edge));
  }
  return caps;
}

Digraph WindowGraph::digraph() const {
  Digraph d{vertex_count(), {}};
  d.arcs.reserve(edges_.size());
  for (const WindowEdge& e : edges_) d.arcs.emplace_back(vertex_index(tail(e)), vertex_index(head(e)));
  return d;
}

WindowGraph unroll(const CircularMapperGraph& g, int decks) {
  if (decks < 1) throw Error(Errc::PreconditionViolated, "a window needs at least one deck transition (R >= 1)");
  return WindowGraph(g, decks);
}

WindowVertex deck_transform(const WindowGraph& w, int u, const WindowVertex& v) {
  const WindowVertex out{v.layer, v.deck + u, v.rank};
  if (!w.contains(v) || !w.contains(out)) throw Error(Errc::OutOfWindow, "T_" + std::to_string(u) + " leaves the window");
  return out;
}

WindowEdge deck_transform(const WindowGraph& w, int u, const WindowEdge& e) {
  const WindowEdge out{e.base_edge, e.deck + u};
  if (!w.edge_index(e) || !w.edge_index(out)) {
    throw Error(Errc::OutOfWindow, "T_" + std::to_string(u) + " leaves the window");
  }
  return out;
}

std::vector<std::optional<Rational>> deck_transform(const WindowGraph& w, int u, const QVector& q) {
  std::vector<std::optional<Rational>> out(w.edge_count());
  bool any = false;
  for (std::size_t k = 0; k < w.edge_count(); ++k) {
    const WindowEdge& e = w.edges()[k];
    if (auto j = w.edge_index({e.base_edge, e.deck + u})) {
      out[k] = q(static_cast<Eigen::Index>(*j));
      any = true;
    }
  }
  if (!any && w.edge_count() > 0) throw Error(Errc::OutOfWindow, "T_" + std::to_string(u) + " moves every edge out of the window");
  return out;
}

bool is_periodic(const WindowGraph& w, const QVector& q) {
  if (w.decks() < 1) throw Error(Errc::PreconditionViolated, "periodicity needs at least two decks");
  for (std::size_t k = 0; k < w.edge_count(); ++k) {
    const WindowEdge& e = w.edges()[k];
    if (auto j = w.edge_index({e.base_edge, e.deck + 1})) {
      if (q(static_cast<Eigen::Index>(k)) != q(static_cast<Eigen::Index>(*j))) return false;
    }
  }
  return true;
}

std::optional<QVector> base_of(const WindowGraph& w, const QVector& q) {
  if (!is_periodic(w, q)) return std::nullopt;
  QVector s(static_cast<Eigen::Index>(w.base().edge_count()));
  for (std::size_t b = 0; b < w.base().edge_count(); ++b) {
    s(static_cast<Eigen::Index>(b)) = q(static_cast<Eigen::Index>(*w.edge_index({b, 0})));
  }
  return s;
}

}  // namespace slimap
