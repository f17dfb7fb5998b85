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

#include "slimap/circle_cover.hpp"

#include "slimap/error.hpp"

#include <algorithm>
#include <optional>
#include <utility>

namespace slimap {
namespace {

Integer floor_of(const Rational& x) {
  const Integer num = numerator_of(x);
  const Integer den = denominator_of(x);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

// Open interval of R.
struct Interval {
  Rational lo;
  Rational hi;
};

Rational arc_end(const Arc& arc) { return arc.start.value() + arc.length; }

// Components of arc a intersected with arc b, expressed in a's lifted frame.
std::vector<Interval> intersect(const Arc& a, const Arc& b) {
  std::vector<Interval> parts;
  const Rational a_lo = a.start.value();
  const Rational a_hi = arc_end(a);
  for (int shift = -1; shift <= 1; ++shift) {
    const Rational b_lo = b.start.value() + shift;
    const Rational b_hi = arc_end(b) + shift;
    const Rational lo = std::max(a_lo, b_lo);
    const Rational hi = std::min(a_hi, b_hi);
    if (lo < hi) parts.push_back({lo, hi});
  }
  return parts;
}

int count_containing(const std::vector<Arc>& arcs, const Angle& p) {
  return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [&](const Arc& a) { return contains(a, p); }));
}

// Points at which membership in the union can change, plus one point inside
// every open gap between consecutive breakpoints. Membership counts are
// constant on each gap, so these points decide coverage, triple overlaps and
// private points exactly.
std::vector<Angle> probe_points(const std::vector<Arc>& arcs) {
  std::vector<Rational> breaks;
  for (const Arc& a : arcs) {
    breaks.push_back(a.start.value());
    breaks.push_back(mod_one(arc_end(a)));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<Angle> probes;
  for (std::size_t k = 0; k < breaks.size(); ++k) {
    probes.emplace_back(breaks[k]);
    const Rational next = (k + 1 < breaks.size()) ? breaks[k + 1] : breaks.front() + 1;
    probes.emplace_back((breaks[k] + next) / 2);
  }
  return probes;
}

// Midpoint of the first uncovered stretch of arc i, in i's lifted frame.
std::optional<Rational> private_witness(const std::vector<Arc>& arcs, std::size_t i) {
  const Arc& a = arcs[i];
  std::vector<Interval> covered;
  for (std::size_t j = 0; j < arcs.size(); ++j) {
    if (j == i) continue;
    for (const Interval& part : intersect(a, arcs[j])) covered.push_back(part);
  }
  std::sort(covered.begin(), covered.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  // `current` is the left end of the candidate uncovered stretch; it is an
  // admissible point itself unless it is the open left end of the arc.
  Rational current = a.start.value();
  bool current_is_open_end = true;
  for (const Interval& c : covered) {
    if (c.lo > current || (c.lo == current && !current_is_open_end)) {
      return (current + c.lo) / 2;
    }
    if (c.hi > current) {
      current = c.hi;
      current_is_open_end = false;
    }
  }
  if (current < arc_end(a)) return (current + arc_end(a)) / 2;
  return std::nullopt;
}

}  // namespace

Rational mod_one(const Rational& x) { return x - Rational(floor_of(x)); }

Angle::Angle(const Rational& x) : value_(mod_one(x)) {}

bool contains(const Arc& arc, const Angle& point) {
  const Rational offset = mod_one(point.value() - arc.start.value());
  return offset > 0 && offset < arc.length;
}

ArcCover validate_cover(const std::vector<Arc>& input) {
  for (const Arc& a : input) {
    if (a.length <= 0 || a.length >= 1) {
      throw Error(Errc::InvalidArc, "arc length " + to_string(a.length) + " is not in (0, 1)");
    }
  }
  if (input.empty()) throw Error(Errc::MissingCoverage, "empty cover");

  const std::vector<Angle> probes = probe_points(input);
  for (const Angle& p : probes) {
    if (count_containing(input, p) == 0) {
      throw Error(Errc::MissingCoverage, "angle " + to_string(p.value()) + " is not covered");
    }
  }
  for (std::size_t i = 0; i < input.size(); ++i) {
    for (std::size_t j = i + 1; j < input.size(); ++j) {
      if (intersect(input[i], input[j]).size() > 1) {
        throw Error(Errc::DisconnectedIntersection,
                    "arcs " + std::to_string(i) + " and " + std::to_string(j) + " meet in more than one component");
      }
    }
  }
  for (const Angle& p : probes) {
    if (count_containing(input, p) >= 3) {
      throw Error(Errc::TripleOverlap, "angle " + to_string(p.value()) + " lies in three or more arcs");
    }
  }
  std::vector<Rational> witness(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    auto w = private_witness(input, i);
    if (!w) throw Error(Errc::NotMinimal, "arc " + std::to_string(i) + " has no private point");
    witness[i] = *w;
  }
  if (input.size() < 3) throw Error(Errc::TooFewArcs, "a good cover of the circle needs at least 3 arcs");

  // Successor of an arc is the unique other arc containing its right end.
  const std::size_t n = input.size();
  std::vector<std::size_t> succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Angle end(arc_end(input[i]));
    std::optional<std::size_t> found;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && contains(input[j], end)) found = j;
    }
    if (!found) throw Error(Errc::MissingCoverage, "right end of arc " + std::to_string(i) + " is not covered");
    succ[i] = *found;
  }

  std::vector<std::size_t> holding_zero;
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(input[i], Angle(0))) holding_zero.push_back(i);
  }
  std::size_t first = holding_zero.front();
  if (holding_zero.size() == 2 && succ[holding_zero[1]] == holding_zero[0]) first = holding_zero[1];

  std::vector<std::size_t> order{first};
  std::vector<bool> seen(n, false);
  seen[first] = true;
  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t next = succ[order.back()];
    if (seen[next]) throw Error(Errc::InvalidArc, "arcs do not form a single cyclic chain");
    seen[next] = true;
    order.push_back(next);
  }
  if (succ[order.back()] != first) throw Error(Errc::InvalidArc, "arcs do not form a single cyclic chain");

  ArcCover cover;
  const Rational base = input[first].start.value();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    cover.arcs.push_back(input[src]);
    const Rational lifted_start = base + mod_one(input[src].start.value() - base);
    cover.lifted_starts.push_back(lifted_start);
    cover.private_points.emplace_back(witness[src]);
  }
  // t_1 is the deck-0 lift of z_1; the other cut points follow in (t_1, t_1 + 1).
  const Rational t1 = cover.lifted_starts[0] + mod_one(witness[first] - base);
  cover.cut_points.push_back(t1);
  for (std::size_t k = 1; k < n; ++k) {
    cover.cut_points.push_back(t1 + mod_one(cover.private_points[k].value() - t1));
  }
  return cover;
}

std::vector<int> locate(const Angle& point, const ArcCover& cover) {
  std::vector<int> hits;
  for (std::size_t i = 0; i < cover.arcs.size(); ++i) {
    if (contains(cover.arcs[i], point)) hits.push_back(static_cast<int>(i));
  }
  return hits;
}

std::vector<LiftedInterval> pullback_cover(const ArcCover& cover, std::int64_t r_min, std::int64_t r_max) {
  if (r_min > r_max) throw Error(Errc::PreconditionViolated, "empty deck range");
  std::vector<LiftedInterval> lifts;
  for (std::int64_t r = r_min; r <= r_max; ++r) {
    for (std::size_t i = 0; i < cover.arcs.size(); ++i) {
      const Rational lo = cover.lifted_starts[i] + Rational(r);
      lifts.push_back({static_cast<int>(i), r, lo, lo + cover.arcs[i].length});
    }
  }
  return lifts;
}

}  // namespace slimap
