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

#include "slimap/mapper.hpp"

#include "slimap/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace slimap {

void validate_space(const SampledSpace& space) {
  std::unordered_set<PointId> ids;
  for (const SamplePoint& p : space.points) {
    if (!ids.insert(p.id).second) throw Error(Errc::InvalidSpace, "duplicate point id " + std::to_string(p.id));
  }
  for (const auto& [a, b] : space.neighbors) {
    if (!ids.count(a) || !ids.count(b)) {
      throw Error(Errc::InvalidSpace, "neighbor edge (" + std::to_string(a) + "," + std::to_string(b) + ") references an unknown id");
    }
    if (a == b) throw Error(Errc::InvalidSpace, "self-loop at point " + std::to_string(a));
  }
}

std::vector<std::vector<PointId>> preimage_components(const SampledSpace& space, const ArcCover& cover, int arc) {
  const Arc& u = cover.arcs.at(static_cast<std::size_t>(arc));
  std::unordered_map<PointId, std::size_t> slot;
  std::vector<PointId> inside;
  for (const SamplePoint& p : space.points) {
    if (contains(u, p.angle)) {
      slot.emplace(p.id, inside.size());
      inside.push_back(p.id);
    }
  }
  std::vector<std::size_t> parent(inside.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : space.neighbors) {
    const auto ia = slot.find(a);
    const auto ib = slot.find(b);
    if (ia == slot.end() || ib == slot.end()) continue;
    const std::size_t ra = find(ia->second);
    const std::size_t rb = find(ib->second);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::map<std::size_t, std::vector<PointId>> groups;
  for (std::size_t k = 0; k < inside.size(); ++k) groups[find(k)].push_back(inside[k]);
  std::vector<std::vector<PointId>> components;
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

Rational default_capacity(const std::vector<PointId>& overlap) {
  return Rational(static_cast<long long>(overlap.size()));
}

MapperGraph build_mapper(const SampledSpace& space, const ArcCover& cover, const CapacityRule& rule) {
  validate_space(space);
  const int n = static_cast<int>(cover.size());
  MapperGraph out;
  std::vector<int> sizes;
  // layer -> (point id -> rank of the component holding it)
  std::vector<std::unordered_map<PointId, int>> owner(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto comps = preimage_components(space, cover, i);
    sizes.push_back(static_cast<int>(comps.size()));
    for (std::size_t j = 0; j < comps.size(); ++j) {
      for (PointId id : comps[j]) owner[static_cast<std::size_t>(i)][id] = static_cast<int>(j);
      out.vertices.push_back({i, static_cast<int>(j), std::move(comps[j])});
    }
  }

  // Shared points per (layer, from, to). Iterating members in vertex order
  // keeps the shared lists sorted.
  std::map<std::tuple<int, int, int>, std::vector<PointId>> shared;
  for (const MapperVertex& v : out.vertices) {
    const int next = (v.layer + 1) % n;
    const auto& next_owner = owner[static_cast<std::size_t>(next)];
    for (PointId id : v.members) {
      if (auto it = next_owner.find(id); it != next_owner.end()) shared[{v.layer, v.rank, it->second}].push_back(id);
    }
  }

  std::vector<EdgeSpec> specs;
  for (const auto& [key, points] : shared) {
    const auto& [layer, from, to] = key;
    Rational cap = rule.kind == CapacityRule::Kind::PointCount ? default_capacity(points) : rule.constant;
    if (auto it = rule.overrides.find(key); it != rule.overrides.end()) cap = it->second;
    specs.push_back({layer, from, to, cap});
  }
  for (const auto& [key, cap] : rule.overrides) {
    if (!shared.count(key)) {
      throw Error(Errc::InvalidEdge, "capacity override for an edge that does not exist (layer " +
                                         std::to_string(std::get<0>(key) + 1) + ")");
    }
  }

  out.graph = make_graph(sizes, specs);
  out.graph.metadata.capacity_rule =
      rule.kind == CapacityRule::Kind::PointCount ? "point_count" : "constant:" + to_string(rule.constant);
  if (!rule.overrides.empty()) out.graph.metadata.capacity_rule += "+overrides";
  for (int i = 0; i < n; ++i) {
    if (sizes[static_cast<std::size_t>(i)] == 0) {
      out.graph.metadata.warnings.push_back("EmptyLayer: layer " + std::to_string(i + 1) + " has an empty preimage");
    }
  }
  return out;
}

}  // namespace slimap
