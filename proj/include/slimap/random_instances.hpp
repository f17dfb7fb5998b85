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

#include <cstdint>
#include <random>

namespace slimap {

/// splitmix64 step; derives independent per-trial seeds from a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi);  // inclusive
  bool chance(int numerator, int denominator);
  /// Uniform over {lo + k / den : 0 <= k <= (hi - lo) * den} for a random
  /// den in [1, max_den].
  Rational rational(int lo, int hi, int max_den);
  /// A rational in [0, 1] with denominator at most max_den.
  Rational fraction(int max_den);

 private:
  std::uint64_t next() { return engine_(); }
  std::mt19937_64 engine_;
};

struct GraphParams {
  int min_layers = 2;
  int max_layers = 6;
  int max_layer_size = 4;
  int edge_chance = 50;  // percent, per candidate vertex pair
  int max_cap = 5;
  bool integer_caps = true;
};

/// Layered graph with every layer nonempty and independent edge choices
/// between consecutive layers. Capacities are integers in [0, max_cap]
/// (or rationals with denominators up to 4 when integer_caps is false).
CircularMapperGraph random_graph(Rng& rng, const GraphParams& params);

/// A random graph whose augmented graph has at most `max_augmented_edges` edges.
CircularMapperGraph random_oracle_graph(Rng& rng, std::size_t max_augmented_edges);

/// Random rational combination of the fundamental cycles.
QVector random_circulation(Rng& rng, const CircularMapperGraph& g);

/// A nonnegative circulation bounded by caps: the sliced max-flow witness
/// scaled by k/6, 0 <= k <= 5.
QVector random_feasible_flow(Rng& rng, const CircularMapperGraph& g, const QVector& caps);

/// A window flow bounded by the pulled-back capacities: the lift of `base`
/// plus bottom-to-top path flows plus rejection-sampled multiples of window
/// cycles. Need not have matching fiber vectors at any two decks.
QVector random_window_flow(Rng& rng, const WindowGraph& w, const QVector& base);

/// Same, but guaranteed to match at decks 0 and R: no path flows, and only
/// cycles avoiding the copies that enter layer 0 of the last deck.
QVector random_matched_window_flow(Rng& rng, const WindowGraph& w, const QVector& base);

}  // namespace slimap
