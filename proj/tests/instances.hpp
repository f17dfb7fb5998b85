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
#include "slimap/io.hpp"
#include "slimap/mapper.hpp"

#include <string>

namespace slimap::testing {

inline std::string fixture(const std::string& name) { return std::string(SLIMAP_FIXTURES) + "/" + name; }

inline ArcCover three_arc_cover() { return validate_cover(io::arcs_from_json(io::read_json_file(fixture("three_arcs.json")))); }

inline SampledSpace squaring_space() { return io::space_from_json(io::read_json_file(fixture("z2_space.json"))); }

/// Mapper graph of z -> z^2 on the three-arc cover: two strands that swap at
/// the wrap, i.e. one directed hexagon.
inline CircularMapperGraph hexagon(const Rational& cap = 3) {
  return make_graph({2, 2, 2}, {{0, 0, 0, cap}, {0, 1, 1, cap}, {1, 0, 0, cap}, {1, 1, 1, cap}, {2, 0, 1, cap}, {2, 1, 0, cap}});
}

inline CircularMapperGraph simple_cycle(const Rational& a, const Rational& b, const Rational& c) {
  return make_graph({1, 1, 1}, {{0, 0, 0, a}, {1, 0, 0, b}, {2, 0, 0, c}});
}

/// Two strands crossing once at the wrap, with the second strand ending in a
/// vertex that has no way out.
inline CircularMapperGraph crossed_dead_end() {
  return make_graph({2, 2}, {{0, 0, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}});
}

/// Two strands joined into one cycle by crossed wraps, one strand throttled.
/// Pairing caps the optimum at 2; without it the strands carry 5 + 1.
inline CircularMapperGraph throttled_crossing() {
  return make_graph({2, 2}, {{0, 0, 0, 5}, {0, 1, 1, 1}, {1, 0, 1, 5}, {1, 1, 0, 5}});
}

}  // namespace slimap::testing
