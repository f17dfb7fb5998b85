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

#include <utility>
#include <vector>

namespace slimap {

/// p*s: every window edge carries the value of the base edge below it.
/// Throws NotAFlow.
QVector pullback_flow(const WindowGraph& w, const QVector& s);

/// Whether u.q stays within 0 <= . <= caps on every edge whose shift is in
/// the window. Throws OutOfWindow.
bool z_action_preserves_caps(const WindowGraph& w, const QVector& q, const QVector& caps, int u);

/// Per-vertex throughput of one window layer at one deck: out-flow on the
/// bottom level, in-flow elsewhere.
struct FiberVector {
  int layer = 0;
  int deck = 0;
  QVector entries;
};

struct FiberProfile {
  std::vector<FiberVector> vectors;  // (deck, layer) order
  Rational value;                    // common row sum
  const FiberVector& at(int layer, int deck, int n) const {
    return vectors[static_cast<std::size_t>(deck * n + layer)];
  }
};

/// Throws NotAFlow when an interior vertex leaks, InconsistentLevel when
/// the row sums differ.
FiberProfile fiber_vectors(const WindowGraph& w, const QVector& q);

/// Window flow conserved at every vertex off the bottom and top levels.
bool is_window_flow(const WindowGraph& w, const QVector& q);

/// First (r1, r2), r1 < r2, in order of r2 then r1, with equal vectors at
/// `layer`. Throws NoRepeatInWindow.
std::pair<int, int> find_repeat(const FiberProfile& profile, int n, int layer = 0);

/// (1/N) * sum over decks u in [r1, r2) of the window values above each base
/// edge, N = r2 - r1. Wrap edges use their copy leaving deck u. Throws
/// PreconditionViolated unless 0 <= r1 < r2 <= R and the layer-0 vectors at
/// r1 and r2 agree.
QVector average_flow(const WindowGraph& w, const QVector& q, int r1, int r2);

/// Least common multiple of the denominators of q on the copies with deck in
/// [deck_lo, deck_hi].
Integer rationalize_window(const WindowGraph& w, const QVector& q, int deck_lo, int deck_hi);

struct RolledFlow {
  QVector flow;      // on the base graph
  Rational value;    // per-deck value of the window flow
  Integer scale;     // lambda
  int r1 = 0;
  int r2 = 0;
};

/// Scale to integers, find a repeat at layer 0, average, scale back. Throws
/// TheoremCheckFailed when the result is not a capacity-feasible circulation
/// with the window's value.
RolledFlow roll_window_flow(const WindowGraph& w, const QVector& q, const QVector& caps);

}  // namespace slimap
