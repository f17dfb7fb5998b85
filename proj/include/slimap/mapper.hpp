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

#include "slimap/circle_cover.hpp"
#include "slimap/graph.hpp"

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace slimap {

using PointId = std::int64_t;

struct SamplePoint {
  PointId id = 0;
  Angle angle;
};

/// Finite sample of a circle-valued map: points with their angles and an
/// undirected neighbor graph standing in for the topology of X.
struct SampledSpace {
  std::vector<SamplePoint> points;
  std::vector<std::pair<PointId, PointId>> neighbors;
};

/// Throws InvalidSpace on duplicate ids, unknown neighbor ids or self-loops.
void validate_space(const SampledSpace& space);

struct MapperVertex {
  int layer = 0;
  int rank = 0;
  std::vector<PointId> members;  // sorted
};

/// How edge capacities are assigned. Overrides are keyed by
/// (source layer, source rank, target rank), 0-based.
struct CapacityRule {
  enum class Kind { PointCount, Constant };
  Kind kind = Kind::PointCount;
  Rational constant{1};
  std::map<std::tuple<int, int, int>, Rational> overrides;

  static CapacityRule point_count() { return {}; }
  static CapacityRule constant_value(Rational c) { return {Kind::Constant, std::move(c), {}}; }
};

/// Connected components of the neighbor graph restricted to the points whose
/// angle lies in arc `arc`, ordered by smallest member id.
std::vector<std::vector<PointId>> preimage_components(const SampledSpace& space, const ArcCover& cover, int arc);

/// Capacity from the shared points of an edge: their count.
Rational default_capacity(const std::vector<PointId>& overlap);

struct MapperGraph {
  CircularMapperGraph graph;
  std::vector<MapperVertex> vertices;  // in (layer, rank) order
};

/// Nerve of the pulled-back cover with edges directed from layer i to i+1
/// (mod n). Two components are joined when they share a sample point; all
/// shared points between the same pair feed one edge. An empty layer is
/// reported as an "EmptyLayer" warning in the graph metadata.
MapperGraph build_mapper(const SampledSpace& space, const ArcCover& cover,
                         const CapacityRule& rule = CapacityRule::point_count());

}  // namespace slimap
