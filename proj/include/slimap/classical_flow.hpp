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
#include "slimap/rational.hpp"

#include <vector>

namespace slimap {

/// Finite directed graph with a distinguished source and target. `place`
/// optionally records a linear layering (source at layer 0, target at the
/// top layer); roll_up needs it.
struct StGraph {
  Digraph graph;
  QVector caps;
  int source = 0;
  int target = 0;
  std::vector<Vertex> place;
};

struct StMaxFlow {
  Rational value;
  QVector flow;
};

/// Shortest-augmenting-path max flow over exact rationals.
/// Throws NegativeCapacity, PreconditionViolated (source == target).
StMaxFlow st_max_flow(const StGraph& g);

/// The lowest and highest nonempty levels of a window.
struct LevelSpan {
  int bottom = 0;
  int top = 0;
};

/// Throws PreconditionViolated unless the window has two nonempty levels.
LevelSpan level_span(const WindowGraph& w);

/// Window vertices keep their indices, then S and T are appended. Window
/// edges come first, then S -> bottom level, then top level -> T. Stubs carry
/// 1 + the sum of all window capacities.
StGraph ab_flow_setup(const WindowGraph& w);

/// Max flow from the bottom level to the top level of the window with
/// conservation at every other vertex, solved as a linear program.
Rational ab_max_flow(const WindowGraph& w);

/// Identifies S with T: the result has layer 0 = {S~T} followed by the
/// layers of `g.place` in order, and every edge of `g` with its capacity.
/// Edges into T become wrap edges.
CircularMapperGraph roll_up(const StGraph& g);

struct ClassicReport {
  Rational ab_flow;       // (A,B) program on the window
  Rational st_flow;       // augmenting paths on the S/T augmentation
  Rational rolled_flow;   // sliced max flow of the roll-up
  bool consistent() const { return ab_flow == st_flow && st_flow == rolled_flow; }
};

ClassicReport classic_equivalence(const WindowGraph& w);

}  // namespace slimap
