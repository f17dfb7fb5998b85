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
#include "slimap/sliced_maxflow.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

namespace slimap {
namespace {

using testing::hexagon;
using testing::squaring_space;
using testing::three_arc_cover;

SampledSpace circle_sample(int points, int winding) {
  SampledSpace s;
  for (int k = 0; k < points; ++k) s.points.push_back({k, Angle(Rational(winding * k, points))});
  for (int k = 0; k < points; ++k) s.neighbors.emplace_back(k, (k + 1) % points);
  return s;
}

TEST(Mapper, SquaringPreimageComponents) {
  const auto comps = preimage_components(squaring_space(), three_arc_cover(), 0);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (std::vector<PointId>{0, 1, 11}));
  EXPECT_EQ(comps[1], (std::vector<PointId>{5, 6, 7}));
}

TEST(Mapper, PreimageEdgeCases) {
  EXPECT_TRUE(preimage_components(SampledSpace{}, three_arc_cover(), 1).empty());
  SampledSpace chain;
  for (int k = 0; k < 4; ++k) chain.points.push_back({k, Angle(Rational(3 + k, 10))});
  for (int k = 0; k + 1 < 4; ++k) chain.neighbors.emplace_back(k, k + 1);
  EXPECT_EQ(preimage_components(chain, three_arc_cover(), 1).size(), 1U);
}

TEST(Mapper, SquaringMapIsHexagon) {
  const MapperGraph m = build_mapper(squaring_space(), three_arc_cover());
  const CircularMapperGraph expected = hexagon(1);
  EXPECT_EQ(m.graph.layer_sizes, expected.layer_sizes);
  ASSERT_EQ(m.graph.edges.size(), expected.edges.size());
  for (std::size_t k = 0; k < expected.edges.size(); ++k) {
    EXPECT_EQ(m.graph.edges[k], expected.edges[k]);
    EXPECT_EQ(m.graph.edges[k].wrap, expected.edges[k].wrap);
  }
  EXPECT_EQ(m.graph.capacities, expected.capacities);
  EXPECT_TRUE(m.graph.metadata.warnings.empty());
  EXPECT_EQ(m.graph.metadata.capacity_rule, "point_count");
  EXPECT_EQ(cycle_rank(m.graph), 1);
}

TEST(Mapper, IdentityMapIsTheNerve) {
  const MapperGraph m = build_mapper(io::space_from_json(io::read_json_file(testing::fixture("identity_space.json"))),
                                     three_arc_cover());
  EXPECT_EQ(m.graph.layer_sizes, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(m.graph.edge_count(), 3U);
  EXPECT_EQ(cycle_rank(m.graph), 1);
}

TEST(Mapper, EmptyLayerWarning) {
  SampledSpace s;
  for (int k = 0; k < 3; ++k) s.points.push_back({k, Angle(Rational(k - 1, 20))});
  s.neighbors = {{0, 1}, {1, 2}};
  const MapperGraph m = build_mapper(s, three_arc_cover());
  EXPECT_EQ(m.graph.edge_count(), 0U);
  ASSERT_EQ(m.graph.metadata.warnings.size(), 2U);
  EXPECT_EQ(m.graph.metadata.warnings[0].rfind("EmptyLayer", 0), 0U);
  EXPECT_TRUE(validate(m.graph).has_warning("EmptyLayer"));
}

TEST(Mapper, CapacityRules) {
  CapacityRule rule = CapacityRule::constant_value(3);
  rule.overrides[{0, 0, 0}] = Rational(7, 2);
  const MapperGraph m = build_mapper(squaring_space(), three_arc_cover(), rule);
  EXPECT_EQ(m.graph.capacities(static_cast<Eigen::Index>(edge_index(m.graph, {0, 0, 0}))), Rational(7, 2));
  EXPECT_EQ(m.graph.capacities(static_cast<Eigen::Index>(edge_index(m.graph, {0, 1, 1}))), 3);
  EXPECT_EQ(default_capacity({3, 4}), 2);

  CapacityRule missing;
  missing.overrides[{0, 0, 1}] = 1;
  EXPECT_THROW(build_mapper(squaring_space(), three_arc_cover(), missing), Error);
}

TEST(Mapper, ParallelOverlapsMergeAndSum) {
  // Two parallel strands, tied together once inside every arc.
  SampledSpace s = circle_sample(24, 1);
  for (int k = 0; k < 24; ++k) s.points.push_back({100 + k, Angle(Rational(k, 24))});
  for (int k = 0; k < 24; ++k) s.neighbors.emplace_back(100 + k, 100 + (k + 1) % 24);
  for (int k : {0, 8, 16}) s.neighbors.emplace_back(k, 100 + k);
  const MapperGraph m = build_mapper(s, three_arc_cover());
  EXPECT_EQ(m.graph.layer_sizes, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(m.graph.edge_count(), 3U);
  // The first overlap (2/15, 1/5) holds k = 4 on each strand.
  EXPECT_EQ(m.graph.capacities(0), 2);
}

TEST(Mapper, RejectsBadSpaces) {
  SampledSpace dup = circle_sample(4, 1);
  dup.points.push_back({2, Angle(0)});
  EXPECT_THROW(build_mapper(dup, three_arc_cover()), Error);
  SampledSpace loop = circle_sample(4, 1);
  loop.neighbors.emplace_back(1, 1);
  EXPECT_THROW(build_mapper(loop, three_arc_cover()), Error);
  SampledSpace unknown = circle_sample(4, 1);
  unknown.neighbors.emplace_back(1, 9);
  EXPECT_THROW(build_mapper(unknown, three_arc_cover()), Error);
}

// Random samples of winding maps with noise in the angles.
SampledSpace random_space(Rng& rng) {
  const int points = rng.integer(6, 30);
  const int winding = rng.integer(1, 3);
  SampledSpace s;
  for (int k = 0; k < points; ++k) {
    const Rational jitter = rng.rational(-1, 1, 7) / (4 * points);
    s.points.push_back({k, Angle(Rational(winding * k, points) + jitter)});
  }
  for (int k = 0; k < points; ++k) {
    if (rng.chance(9, 10)) s.neighbors.emplace_back(k, (k + 1) % points);
  }
  return s;
}

TEST(MapperProperty, EveryPointInOneOrTwoVertices) {
  Rng rng(404);
  const ArcCover cover = three_arc_cover();
  for (int trial = 0; trial < 60; ++trial) {
    const SampledSpace s = random_space(rng);
    const MapperGraph m = build_mapper(s, cover);
    std::map<PointId, int> seen;
    for (const MapperVertex& v : m.vertices) {
      for (PointId id : v.members) ++seen[id];
    }
    for (const SamplePoint& p : s.points) {
      EXPECT_GE(seen[p.id], 1);
      EXPECT_LE(seen[p.id], 2);
    }
    const ValidationReport report = validate(m.graph);
    EXPECT_TRUE(report.ok());
    for (const Edge& e : m.graph.edges) EXPECT_EQ(e.wrap, e.tail.layer == 2);
  }
}

TEST(MapperProperty, PermutedIdsGiveIsomorphicGraph) {
  Rng rng(505);
  const ArcCover cover = three_arc_cover();
  for (int trial = 0; trial < 40; ++trial) {
    const SampledSpace s = random_space(rng);
    std::vector<PointId> perm(s.points.size());
    for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<PointId>(k);
    for (std::size_t k = perm.size(); k > 1; --k) std::swap(perm[k - 1], perm[static_cast<std::size_t>(rng.integer(0, static_cast<int>(k) - 1))]);
    SampledSpace t = s;
    for (SamplePoint& p : t.points) p.id = perm[static_cast<std::size_t>(p.id)];
    for (auto& [a, b] : t.neighbors) {
      a = perm[static_cast<std::size_t>(a)];
      b = perm[static_cast<std::size_t>(b)];
    }
    const MapperGraph m = build_mapper(s, cover);
    const MapperGraph p = build_mapper(t, cover);
    ASSERT_EQ(m.graph.layer_sizes, p.graph.layer_sizes);
    ASSERT_EQ(m.graph.edge_count(), p.graph.edge_count());

    // Match vertices through their permuted member sets, then compare edges.
    std::map<std::pair<int, std::set<PointId>>, int> rank_in_p;
    for (const MapperVertex& v : p.vertices) rank_in_p[{v.layer, {v.members.begin(), v.members.end()}}] = v.rank;
    std::map<std::pair<int, int>, int> to_p;
    for (const MapperVertex& v : m.vertices) {
      std::set<PointId> image;
      for (PointId id : v.members) image.insert(perm[static_cast<std::size_t>(id)]);
      const auto it = rank_in_p.find({v.layer, image});
      ASSERT_NE(it, rank_in_p.end());
      to_p[{v.layer, v.rank}] = it->second;
    }
    for (std::size_t k = 0; k < m.graph.edge_count(); ++k) {
      const Edge& e = m.graph.edges[k];
      const Vertex tail{e.tail.layer, to_p[{e.tail.layer, e.tail.rank}]};
      const Vertex head{e.head.layer, to_p[{e.head.layer, e.head.rank}]};
      const auto j = find_edge(p.graph, tail, head);
      ASSERT_TRUE(j.has_value());
      EXPECT_EQ(p.graph.capacities(static_cast<Eigen::Index>(*j)), m.graph.capacities(static_cast<Eigen::Index>(k)));
    }
  }
}

}  // namespace
}  // namespace slimap
