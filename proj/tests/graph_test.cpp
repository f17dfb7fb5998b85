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

#include "instances.hpp"

#include "slimap/error.hpp"
#include "slimap/random_instances.hpp"

#include <gtest/gtest.h>

namespace slimap {
namespace {

using testing::hexagon;
using testing::simple_cycle;

bool has_error(const ValidationReport& r, const std::string& code) {
  for (const auto& e : r.errors) {
    if (e.code == code) return true;
  }
  return false;
}

TEST(Graph, HexagonIsValid) {
  const ValidationReport r = validate(hexagon());
  EXPECT_TRUE(r.ok());
  EXPECT_TRUE(r.warnings.empty());
}

TEST(Graph, CanonicalOrderAndWrapFlags) {
  const CircularMapperGraph g = make_graph({2, 2, 2}, {{2, 1, 0, 5}, {0, 1, 1, 1}, {1, 0, 0, 2}, {0, 0, 0, 4}});
  ASSERT_EQ(g.edge_count(), 4U);
  for (std::size_t k = 1; k < g.edge_count(); ++k) EXPECT_LT(g.edges[k - 1], g.edges[k]);
  EXPECT_EQ(g.capacities, (QVector(4) << 4, 1, 2, 5).finished());
  EXPECT_TRUE(g.edges[3].wrap);
  EXPECT_FALSE(g.edges[0].wrap);
  EXPECT_EQ(edge_index(g, {2, 1, 0}), 3U);
  EXPECT_THROW(edge_index(g, {2, 0, 0}), Error);
}

TEST(Graph, ValidationErrors) {
  CircularMapperGraph skip = make_graph({1, 1, 1}, {{0, 0, 0, 1}});
  skip.edges[0].head = {2, 0};
  EXPECT_TRUE(has_error(validate(skip), "InvalidEdge"));

  CircularMapperGraph missing = simple_cycle(1, 1, 1);
  missing.edges[0].head.rank = 3;
  EXPECT_TRUE(has_error(validate(missing), "InvalidEdge"));

  CircularMapperGraph flag = simple_cycle(1, 1, 1);
  flag.edges[0].wrap = true;
  EXPECT_TRUE(has_error(validate(flag), "InvalidEdge"));

  CircularMapperGraph dup = make_graph({1, 1}, std::vector<Edge>{{{0, 0}, {1, 0}}, {{0, 0}, {1, 0}}}, QVector::Ones(2));
  EXPECT_TRUE(has_error(validate(dup), "DuplicateEdge"));

  CircularMapperGraph negative = simple_cycle(1, -1, 1);
  EXPECT_TRUE(has_error(validate(negative), "NegativeCapacity"));
  EXPECT_THROW(require_valid(negative), Error);

  CircularMapperGraph mismatch = simple_cycle(1, 1, 1);
  mismatch.capacities = QVector::Ones(2);
  EXPECT_TRUE(has_error(validate(mismatch), "InvalidGraph"));
}

TEST(Graph, ValidationWarnings) {
  EXPECT_TRUE(validate(testing::crossed_dead_end()).has_warning("DanglingVertex"));
  const CircularMapperGraph empty = make_graph({1, 0, 1}, std::vector<EdgeSpec>{});
  EXPECT_TRUE(validate(empty).ok());
  EXPECT_TRUE(validate(empty).has_warning("EmptyLayer"));
}

TEST(Graph, CycleRank) {
  EXPECT_EQ(cycle_rank(hexagon()), 1);
  EXPECT_EQ(cycle_rank(simple_cycle(1, 1, 1)), 1);
  const CircularMapperGraph strands = make_graph({2, 2, 2}, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}, {0, 1, 1}, {1, 1, 1}, {2, 1, 1}});
  EXPECT_EQ(cycle_rank(strands), 2);
  EXPECT_EQ(cycle_rank(make_graph({1, 2, 1}, {{0, 0, 0}, {0, 0, 1}})), 0);
}

TEST(Window, HexagonOneDeck) {
  const WindowGraph w = unroll(hexagon(), 1);
  EXPECT_EQ(w.vertex_count(), 12);
  EXPECT_EQ(w.edge_count(), 10U);
  EXPECT_EQ(w.level_count(), 6);
  int wraps = 0;
  for (const WindowEdge& e : w.edges()) {
    const bool wrap = w.base().edges[e.base_edge].wrap;
    wraps += wrap ? 1 : 0;
    if (wrap) {
      EXPECT_EQ(e.deck, 0);
      EXPECT_EQ(w.head(e).deck, 1);
    } else {
      EXPECT_EQ(w.head(e).deck, e.deck);
    }
  }
  EXPECT_EQ(wraps, 2);
  EXPECT_THROW(unroll(hexagon(), 0), Error);
}

TEST(Window, ProjectionIsACovering) {
  const CircularMapperGraph g = hexagon();
  const WindowGraph w = unroll(g, 3);
  std::vector<int> copies(g.edge_count(), 0);
  for (const WindowEdge& e : w.edges()) {
    ++copies[project(e)];
    const Edge& b = g.edges[project(e)];
    EXPECT_EQ(project(w.tail(e)), b.tail);
    EXPECT_EQ(project(w.head(e)), b.head);
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) EXPECT_EQ(copies[k], g.edges[k].wrap ? 3 : 4);
  EXPECT_EQ(project(WindowVertex{1, 5, 2}), (Vertex{1, 2}));
  int fiber = 0;
  for (int v = 0; v < w.vertex_count(); ++v) fiber += project(w.vertex(v)) == Vertex{2, 1} ? 1 : 0;
  EXPECT_EQ(fiber, 4);
}

TEST(Window, DeckTransforms) {
  const WindowGraph w = unroll(hexagon(), 3);
  EXPECT_EQ(deck_transform(w, 2, WindowVertex{0, 0, 0}), (WindowVertex{0, 2, 0}));
  EXPECT_EQ(deck_transform(w, 0, WindowVertex{1, 3, 1}), (WindowVertex{1, 3, 1}));
  EXPECT_THROW(deck_transform(w, 1, WindowVertex{0, 3, 0}), Error);
  for (const WindowEdge& e : w.edges()) {
    if (e.deck + 2 > 3 || (w.base().edges[e.base_edge].wrap && e.deck + 2 > 2)) continue;
    EXPECT_EQ(deck_transform(w, 1, deck_transform(w, 1, e)), deck_transform(w, 2, e));
    EXPECT_EQ(project(deck_transform(w, 2, e)), project(e));
  }
  const WindowEdge last_wrap{4, 2};
  EXPECT_THROW(deck_transform(w, 1, last_wrap), Error);
  try {
    deck_transform(w, 9, QVector::Zero(static_cast<Eigen::Index>(w.edge_count())));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::OutOfWindow);
  }
}

TEST(Window, ShiftedAssignment) {
  const WindowGraph w = unroll(simple_cycle(1, 1, 1), 1);
  QVector q(5);
  q << 1, 2, 3, 4, 5;  // deck 0: edges 0,1,2(wrap); deck 1: edges 0,1
  const auto shifted = deck_transform(w, 1, q);
  EXPECT_EQ(*shifted[0], 4);
  EXPECT_EQ(*shifted[1], 5);
  EXPECT_FALSE(shifted[2].has_value());
  EXPECT_FALSE(shifted[3].has_value());
}

TEST(Window, Periodicity) {
  const CircularMapperGraph g = hexagon();
  const WindowGraph w = unroll(g, 2);
  const auto m = static_cast<Eigen::Index>(w.edge_count());
  EXPECT_TRUE(is_periodic(w, constant_vector(m, 7)));
  EXPECT_EQ(*base_of(w, constant_vector(m, 7)), constant_vector(6, 7));

  QVector s(6);
  s << 1, 2, 3, 4, 5, 6;
  QVector lifted(m);
  for (Eigen::Index k = 0; k < m; ++k) lifted(k) = s(static_cast<Eigen::Index>(w.edges()[static_cast<std::size_t>(k)].base_edge));
  EXPECT_TRUE(is_periodic(w, lifted));
  EXPECT_EQ(*base_of(w, lifted), s);
  lifted(m - 1) += 1;
  EXPECT_FALSE(is_periodic(w, lifted));
  EXPECT_FALSE(base_of(w, lifted).has_value());
}

TEST(GraphProperty, WindowCountsAndEquivariance) {
  Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const CircularMapperGraph g = random_graph(rng, {});
    const int r = rng.integer(1, 4);
    const WindowGraph w = unroll(g, r);
    std::size_t wraps = 0;
    for (const Edge& e : g.edges) wraps += e.wrap ? 1 : 0;
    EXPECT_EQ(w.vertex_count(), (r + 1) * vertex_count(g));
    EXPECT_EQ(w.edge_count(), static_cast<std::size_t>(r + 1) * g.edge_count() - wraps);
    for (std::size_t k = 0; k < w.edge_count(); ++k) {
      EXPECT_EQ(w.edge_index(w.edges()[k]), k);
      const auto [tail, head] = w.digraph().arcs[k];
      EXPECT_EQ(w.level(w.vertex(head)), w.level(w.vertex(tail)) + 1);
    }
    for (int v = 0; v < w.vertex_count(); ++v) EXPECT_EQ(w.vertex_index(w.vertex(v)), v);
    const int u = rng.integer(-r, r);
    for (int v = 0; v < w.vertex_count(); ++v) {
      const WindowVertex x = w.vertex(v);
      if (x.deck + u < 0 || x.deck + u > r) continue;
      EXPECT_EQ(project(deck_transform(w, u, x)), project(x));
    }
  }
}

}  // namespace
}  // namespace slimap
