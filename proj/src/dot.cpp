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

#include "slimap/dot.hpp"

#include <sstream>

namespace slimap {

namespace {

constexpr const char* kPrelude = "  rankdir=BT;\n  node [shape=circle, fontsize=10];\n  edge [fontsize=9];\n";

std::string node_name(int layer, int rank) {
  return "v" + std::to_string(layer + 1) + "_" + std::to_string(rank + 1);
}

std::string node_name(const WindowVertex& v) {
  return node_name(v.layer, v.rank) + "_d" + std::to_string(v.deck);
}

void write_edge(std::ostringstream& o, const std::string& tail, const std::string& head, const Rational& cap,
                const std::optional<Rational>& flow, bool wrap) {
  o << "  " << tail << " -> " << head << " [label=\"" << to_string(cap) << "\"";
  if (flow) o << ", xlabel=\"" << to_string(*flow) << "\"";
  if (wrap) o << ", style=dashed";
  o << "];\n";
}

std::optional<Rational> entry(const std::optional<QVector>& flow, std::size_t k) {
  if (!flow) return std::nullopt;
  return (*flow)(static_cast<Eigen::Index>(k));
}

}  // namespace

std::string to_dot(const CircularMapperGraph& g, const std::optional<QVector>& flow) {
  std::ostringstream o;
  o << "digraph K {\n" << kPrelude;
  for (int i = 0; i < g.n; ++i) {
    o << "  { rank=same;";
    for (int j = 0; j < g.layer_sizes[static_cast<std::size_t>(i)]; ++j) o << ' ' << node_name(i, j) << ';';
    o << " }\n";
  }
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    const Edge& e = g.edges[k];
    write_edge(o, node_name(e.tail.layer, e.tail.rank), node_name(e.head.layer, e.head.rank),
               g.capacities(static_cast<Eigen::Index>(k)), entry(flow, k), e.wrap);
  }
  o << "}\n";
  return o.str();
}

std::string to_dot(const WindowGraph& w, const std::optional<QVector>& flow) {
  const CircularMapperGraph& g = w.base();
  std::ostringstream o;
  o << "digraph window {\n" << kPrelude;
  for (int r = 0; r <= w.decks(); ++r) {
    o << "  subgraph cluster_deck_" << r << " {\n    label=\"deck " << r << "\";\n";
    for (int i = 0; i < g.n; ++i) {
      o << "    { rank=same;";
      for (int j = 0; j < g.layer_sizes[static_cast<std::size_t>(i)]; ++j) o << ' ' << node_name({i, r, j}) << ';';
      o << " }\n";
    }
    o << "  }\n";
  }
  const QVector caps = w.capacities();
  for (std::size_t k = 0; k < w.edge_count(); ++k) {
    const WindowEdge& e = w.edges()[k];
    write_edge(o, node_name(w.tail(e)), node_name(w.head(e)), caps(static_cast<Eigen::Index>(k)), entry(flow, k),
               g.edges[e.base_edge].wrap);
  }
  o << "}\n";
  return o.str();
}

}  // namespace slimap
