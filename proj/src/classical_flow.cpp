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

#include "slimap/classical_flow.hpp"

#include "slimap/error.hpp"
#include "slimap/simplex.hpp"
#include "slimap/sliced_maxflow.hpp"

#include <deque>
#include <limits>

namespace slimap {

StMaxFlow st_max_flow(const StGraph& g) {
  const auto nv = static_cast<std::size_t>(g.graph.vertex_count);
  if (g.source == g.target) throw Error(Errc::PreconditionViolated, "source and target coincide");
  if (g.caps.size() != static_cast<Eigen::Index>(g.graph.arcs.size())) {
    throw Error(Errc::InvalidGraph, "capacity vector does not match the arc count");
  }
  for (const Rational& c : g.caps) {
    if (c < 0) throw Error(Errc::NegativeCapacity, "capacity " + to_string(c) + " is negative");
  }

  // Residual arcs: 2k is arc k forward, 2k+1 its reverse.
  std::vector<std::vector<std::size_t>> out(nv);
  for (std::size_t k = 0; k < g.graph.arcs.size(); ++k) {
    out[static_cast<std::size_t>(g.graph.arcs[k].first)].push_back(2 * k);
    out[static_cast<std::size_t>(g.graph.arcs[k].second)].push_back(2 * k + 1);
  }
  StMaxFlow result{Rational(0), QVector::Zero(g.caps.size())};
  auto residual = [&](std::size_t r) {
    const auto k = static_cast<Eigen::Index>(r / 2);
    return r % 2 == 0 ? g.caps(k) - result.flow(k) : result.flow(k);
  };
  auto head_of = [&](std::size_t r) {
    const auto& arc = g.graph.arcs[r / 2];
    return static_cast<std::size_t>(r % 2 == 0 ? arc.second : arc.first);
  };

  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  const auto s = static_cast<std::size_t>(g.source);
  const auto t = static_cast<std::size_t>(g.target);
  for (;;) {
    std::vector<std::size_t> via(nv, none);
    std::vector<bool> seen(nv, false);
    std::deque<std::size_t> queue{s};
    seen[s] = true;
    while (!queue.empty() && !seen[t]) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t r : out[v]) {
        const std::size_t w = head_of(r);
        if (seen[w] || residual(r) <= 0) continue;
        seen[w] = true;
        via[w] = r;
        queue.push_back(w);
      }
    }
    if (!seen[t]) break;
    Rational push = residual(via[t]);
    for (std::size_t v = t; v != s; v = head_of(via[v] ^ 1)) push = std::min(push, residual(via[v]));
    for (std::size_t v = t; v != s; v = head_of(via[v] ^ 1)) {
      const std::size_t r = via[v];
      const auto k = static_cast<Eigen::Index>(r / 2);
      if (r % 2 == 0) {
        result.flow(k) += push;
      } else {
        result.flow(k) -= push;
      }
    }
    result.value += push;
  }
  return result;
}

LevelSpan level_span(const WindowGraph& w) {
  std::vector<int> nonempty;
  for (int level = 0; level < w.level_count(); ++level) {
    if (w.base().layer_sizes[static_cast<std::size_t>(level % w.base().n)] > 0) nonempty.push_back(level);
  }
  if (nonempty.size() < 2) throw Error(Errc::PreconditionViolated, "window needs two nonempty levels");
  return {nonempty.front(), nonempty.back()};
}

namespace {

Rational stub_capacity(const WindowGraph& w) {
  Rational total = 1;
  for (const Rational& c : w.capacities()) total += c;
  return total;
}

}  // namespace

StGraph ab_flow_setup(const WindowGraph& w) {
  const LevelSpan span = level_span(w);
  StGraph g;
  g.graph = w.digraph();
  const int nv = w.vertex_count();
  g.source = nv;
  g.target = nv + 1;
  g.graph.vertex_count = nv + 2;

  g.place.resize(static_cast<std::size_t>(nv + 2));
  for (int v = 0; v < nv; ++v) {
    const WindowVertex x = w.vertex(v);
    g.place[static_cast<std::size_t>(v)] = {w.level(x) - span.bottom + 1, x.rank};
  }
  g.place[static_cast<std::size_t>(g.source)] = {0, 0};
  g.place[static_cast<std::size_t>(g.target)] = {span.top - span.bottom + 2, 0};

  const QVector window_caps = w.capacities();
  std::vector<Rational> caps(window_caps.begin(), window_caps.end());
  const Rational stub = stub_capacity(w);
  for (int v = 0; v < nv; ++v) {
    if (w.level(w.vertex(v)) != span.bottom) continue;
    g.graph.arcs.emplace_back(g.source, v);
    caps.push_back(stub);
  }
  for (int v = 0; v < nv; ++v) {
    if (w.level(w.vertex(v)) != span.top) continue;
    g.graph.arcs.emplace_back(v, g.target);
    caps.push_back(stub);
  }
  g.caps = Eigen::Map<const QVector>(caps.data(), static_cast<Eigen::Index>(caps.size()));
  return g;
}

Rational ab_max_flow(const WindowGraph& w) {
  const LevelSpan span = level_span(w);
  const Digraph d = w.digraph();
  const QVector caps = w.capacities();
  std::vector<int> row_of(static_cast<std::size_t>(w.vertex_count()), -1);
  int rows = 0;
  for (int v = 0; v < w.vertex_count(); ++v) {
    const int level = w.level(w.vertex(v));
    if (level != span.bottom && level != span.top) row_of[static_cast<std::size_t>(v)] = rows++;
  }
  const auto vars = static_cast<Eigen::Index>(d.arcs.size());
  LPProblem<Rational> lp;
  lp.equalities = QMatrix::Zero(rows, vars);
  lp.rhs = QVector::Zero(rows);
  lp.objective = QVector::Zero(vars);
  lp.upper.reserve(static_cast<std::size_t>(vars));
  for (Eigen::Index k = 0; k < vars; ++k) {
    const auto [tail, head] = d.arcs[static_cast<std::size_t>(k)];
    if (int r = row_of[static_cast<std::size_t>(tail)]; r >= 0) lp.equalities(r, k) -= 1;
    if (int r = row_of[static_cast<std::size_t>(head)]; r >= 0) lp.equalities(r, k) += 1;
    if (w.level(w.vertex(tail)) == span.bottom) lp.objective(k) = 1;
    lp.upper.emplace_back(caps(k));
  }
  const LPSolution<Rational> sol = simplex_solve(lp);
  if (sol.status != LPStatus::Optimal) throw Error(Errc::InternalInconsistency, "(A,B) program should be bounded and feasible");
  return sol.value;
}

CircularMapperGraph roll_up(const StGraph& g) {
  if (g.place.size() != static_cast<std::size_t>(g.graph.vertex_count)) {
    throw Error(Errc::PreconditionViolated, "roll-up needs a layered S-T graph");
  }
  const int top = g.place[static_cast<std::size_t>(g.target)].layer;
  if (g.place[static_cast<std::size_t>(g.source)].layer != 0 || top < 2) {
    throw Error(Errc::PreconditionViolated, "source must sit alone below the target");
  }
  // Layers 1..top-1 keep their place; T joins S in layer 0.
  auto rolled = [&](int v) {
    return v == g.target ? Vertex{0, 0} : g.place[static_cast<std::size_t>(v)];
  };
  std::vector<int> sizes(static_cast<std::size_t>(top), 0);
  for (int v = 0; v < g.graph.vertex_count; ++v) {
    if (v == g.target) continue;
    const Vertex p = rolled(v);
    if (p.layer < 0 || p.layer >= top) throw Error(Errc::PreconditionViolated, "vertex placed outside the S-T span");
    sizes[static_cast<std::size_t>(p.layer)] = std::max(sizes[static_cast<std::size_t>(p.layer)], p.rank + 1);
  }
  std::vector<Edge> edges;
  for (const auto& [tail, head] : g.graph.arcs) edges.push_back({rolled(tail), rolled(head), false});
  CircularMapperGraph out = make_graph(std::move(sizes), std::move(edges), g.caps);
  out.metadata.capacity_rule = "roll_up";
  require_valid(out);
  return out;
}

ClassicReport classic_equivalence(const WindowGraph& w) {
  ClassicReport report;
  report.ab_flow = ab_max_flow(w);
  const StGraph st = ab_flow_setup(w);
  report.st_flow = st_max_flow(st).value;
  report.rolled_flow = sliced_max_flow(roll_up(st)).value;
  return report;
}

}  // namespace slimap
