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

#include "slimap/random_instances.hpp"

#include "slimap/flow.hpp"
#include "slimap/sliced_maxflow.hpp"
#include "slimap/unroll_periodic.hpp"

#include <algorithm>

namespace slimap {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int Rng::integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

bool Rng::chance(int numerator, int denominator) { return integer(1, denominator) <= numerator; }

Rational Rng::rational(int lo, int hi, int max_den) {
  const int den = integer(1, max_den);
  const int k = integer(0, (hi - lo) * den);
  return Rational(lo) + Rational(k, den);
}

Rational Rng::fraction(int max_den) { return rational(0, 1, max_den); }

CircularMapperGraph random_graph(Rng& rng, const GraphParams& params) {
  const int n = rng.integer(params.min_layers, params.max_layers);
  std::vector<int> sizes(static_cast<std::size_t>(n));
  for (int& m : sizes) m = rng.integer(1, params.max_layer_size);
  std::vector<EdgeSpec> specs;
  for (int i = 0; i < n; ++i) {
    const int next = sizes[static_cast<std::size_t>((i + 1) % n)];
    for (int j = 0; j < sizes[static_cast<std::size_t>(i)]; ++j) {
      for (int k = 0; k < next; ++k) {
        if (!rng.chance(params.edge_chance, 100)) continue;
        const Rational cap = params.integer_caps ? Rational(rng.integer(0, params.max_cap))
                                                 : rng.rational(0, params.max_cap, 4);
        specs.push_back({i, j, k, cap});
      }
    }
  }
  CircularMapperGraph g = make_graph(std::move(sizes), specs);
  g.metadata.capacity_rule = "random";
  return g;
}

CircularMapperGraph random_oracle_graph(Rng& rng, std::size_t max_augmented_edges) {
  GraphParams params;
  params.max_layers = 4;
  params.max_layer_size = 2;
  params.edge_chance = 60;
  for (;;) {
    CircularMapperGraph g = random_graph(rng, params);
    if (build_augmented(g).edges.size() <= max_augmented_edges) return g;
  }
}

QVector random_circulation(Rng& rng, const CircularMapperGraph& g) {
  QVector s = QVector::Zero(static_cast<Eigen::Index>(g.edge_count()));
  for (const QVector& c : cycle_space_basis(g)) s += rng.rational(-3, 3, 5) * c;
  return s;
}

QVector random_feasible_flow(Rng& rng, const CircularMapperGraph& g, const QVector& caps) {
  return sliced_max_flow(g, caps).witness * Rational(rng.integer(0, 5), 6);
}

namespace {

void add_path_flows(Rng& rng, const WindowGraph& w, const QVector& caps, QVector& q) {
  const Digraph d = w.digraph();
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(d.vertex_count));
  for (std::size_t k = 0; k < d.arcs.size(); ++k) out[static_cast<std::size_t>(d.arcs[k].first)].push_back(k);
  int bottom = -1;
  int top = -1;
  for (int v = 0; v < d.vertex_count; ++v) {
    const int level = w.level(w.vertex(v));
    if (bottom < 0 || level < bottom) bottom = level;
    top = std::max(top, level);
  }
  std::vector<int> starts;
  for (int v = 0; v < d.vertex_count; ++v) {
    if (w.level(w.vertex(v)) == bottom) starts.push_back(v);
  }
  if (starts.empty()) return;

  const int paths = rng.integer(1, 3);
  for (int p = 0; p < paths; ++p) {
    int v = starts[static_cast<std::size_t>(rng.integer(0, static_cast<int>(starts.size()) - 1))];
    std::vector<std::size_t> path;
    while (w.level(w.vertex(v)) != top && !out[static_cast<std::size_t>(v)].empty()) {
      const auto& choices = out[static_cast<std::size_t>(v)];
      const std::size_t k = choices[static_cast<std::size_t>(rng.integer(0, static_cast<int>(choices.size()) - 1))];
      path.push_back(k);
      v = d.arcs[k].second;
    }
    if (w.level(w.vertex(v)) != top || path.empty()) continue;
    Rational room = caps(static_cast<Eigen::Index>(path.front())) - q(static_cast<Eigen::Index>(path.front()));
    for (std::size_t k : path) room = std::min(room, caps(static_cast<Eigen::Index>(k)) - q(static_cast<Eigen::Index>(k)));
    const Rational amount = room * Rational(rng.integer(1, 3), 3);
    for (std::size_t k : path) q(static_cast<Eigen::Index>(k)) += amount;
  }
}

void add_cycles(Rng& rng, const std::vector<QVector>& cycles, const QVector& caps, QVector& q) {
  for (const QVector& c : cycles) {
    for (int attempt = 0; attempt < 3; ++attempt) {
      const Rational t = rng.rational(-2, 2, 3);
      const QVector candidate = q + t * c;
      if (within_capacity(candidate, caps)) {
        q = candidate;
        break;
      }
    }
  }
}

}  // namespace

QVector random_window_flow(Rng& rng, const WindowGraph& w, const QVector& base) {
  const QVector caps = w.capacities();
  QVector q = pullback_flow(w, base);
  add_path_flows(rng, w, caps, q);
  add_cycles(rng, fundamental_cycles(w.digraph()), caps, q);
  return q;
}

QVector random_matched_window_flow(Rng& rng, const WindowGraph& w, const QVector& base) {
  const QVector caps = w.capacities();
  QVector q = pullback_flow(w, base);
  // Cycles of the window with the last wrap copies removed, re-embedded.
  Digraph d = w.digraph();
  std::vector<std::size_t> kept;
  Digraph sub{d.vertex_count, {}};
  for (std::size_t k = 0; k < w.edge_count(); ++k) {
    const WindowEdge& e = w.edges()[k];
    if (w.base().edges[e.base_edge].wrap && e.deck == w.decks() - 1) continue;
    kept.push_back(k);
    sub.arcs.push_back(d.arcs[k]);
  }
  std::vector<QVector> cycles;
  for (const QVector& c : fundamental_cycles(sub)) {
    QVector full = QVector::Zero(static_cast<Eigen::Index>(w.edge_count()));
    for (std::size_t j = 0; j < kept.size(); ++j) full(static_cast<Eigen::Index>(kept[j])) = c(static_cast<Eigen::Index>(j));
    cycles.push_back(std::move(full));
  }
  add_cycles(rng, cycles, caps, q);
  return q;
}

}  // namespace slimap
