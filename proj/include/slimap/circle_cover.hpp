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

#include "slimap/rational.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace slimap {

/// A point of the circle R/Z, stored as its representative in [0, 1).
class Angle {
 public:
  Angle() = default;
  explicit Angle(const Rational& x);

  const Rational& value() const { return value_; }

  friend bool operator==(const Angle&, const Angle&) = default;
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  Rational value_{0};
};

/// Reduces x into [0, 1).
Rational mod_one(const Rational& x);

/// The open arc (start, start + length) mod 1, with 0 < length < 1.
struct Arc {
  Angle start;
  Rational length;
};

bool contains(const Arc& arc, const Angle& point);

/// A validated minimal good cover of the circle, stored in cyclic order:
/// arc i meets exactly arcs i-1 and i+1 (mod n).
struct ArcCover {
  std::vector<Arc> arcs;
  std::vector<Angle> private_points;  // z_i, one witness per arc
  std::vector<Rational> cut_points;   // t_i, increasing lifts of z_i in (t_1, t_1 + 1)
  std::vector<Rational> lifted_starts;  // left endpoint of each arc's deck-0 lift

  std::size_t size() const { return arcs.size(); }
};

/// Lift of arc `arc` at deck `deck`: the open interval (lo, hi) of R.
struct LiftedInterval {
  int arc = 0;
  std::int64_t deck = 0;
  Rational lo;
  Rational hi;

  friend bool operator==(const LiftedInterval&, const LiftedInterval&) = default;
};

/// Checks the minimal-good-cover axioms and returns the cover in canonical
/// cyclic order. Arc 0 is the arc containing angle 0 (the earlier of the two
/// when 0 lies in an overlap). Throws Error with one of MissingCoverage,
/// DisconnectedIntersection, TripleOverlap, NotMinimal, InvalidArc, TooFewArcs.
ArcCover validate_cover(const std::vector<Arc>& arcs);

/// Indices of the arcs containing `point`, ascending. Size 1 or 2.
std::vector<int> locate(const Angle& point, const ArcCover& cover);

/// All lifts U_i^r for r in [r_min, r_max], ordered by left endpoint.
std::vector<LiftedInterval> pullback_cover(const ArcCover& cover, std::int64_t r_min, std::int64_t r_max);

}  // namespace slimap
