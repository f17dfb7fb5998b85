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

#include "slimap/unroll_periodic.hpp"

#include "slimap/classical_flow.hpp"
#include "slimap/error.hpp"
#include "slimap/flow.hpp"

namespace slimap {

QVector pullback_flow(const WindowGraph& w, const QVector& s) {
  if (!is_flow(w.base(), s)) throw Error(Errc::NotAFlow, "only circulations lift to window flows");
  QVector q(static_cast<Eigen::Index>(w.edge_count()));
  for (std::size_t k = 0; k < w.edge_count(); ++k) {
    q(static_cast<Eigen::Index>(k)) = s(static_cast<Eigen::Index>(w.edges()[k].base_edge));
  }
  return q;
}

bool z_action_preserves_caps(const WindowGraph& w, const QVector& q, const QVector& caps, int u) {
  const auto shifted = deck_transform(w, u, q);
  for (std::size_t k = 0; k < shifted.size(); ++k) {
    if (!shifted[k]) continue;
    if (*shifted[k] < 0 || *shifted[k] > caps(static_cast<Eigen::Index>(k))) return false;
  }
  return true;
}

namespace {

struct Throughput {
  QVector in;
  QVector out;
};

Throughput throughput(const WindowGraph& w, const QVector& q) {
  Throughput t{QVector::Zero(w.vertex_count()), QVector::Zero(w.vertex_count())};
  const Digraph d = w.digraph();
  for (std::size_t k = 0; k < d.arcs.size(); ++k) {
    t.out(d.arcs[k].first) += q(static_cast<Eigen::Index>(k));
    t.in(d.arcs[k].second) += q(static_cast<Eigen::Index>(k));
  }
  return t;
}

}  // namespace

bool is_window_flow(const WindowGraph& w, const QVector& q) {
  if (q.size() != static_cast<Eigen::Index>(w.edge_count())) return false;
  const LevelSpan span = level_span(w);
  const Throughput t = throughput(w, q);
  for (int v = 0; v < w.vertex_count(); ++v) {
    const int level = w.level(w.vertex(v));
    if (level != span.bottom && level != span.top && t.in(v) != t.out(v)) return false;
  }
  return true;
}

FiberProfile fiber_vectors(const WindowGraph& w, const QVector& q) {
  if (!is_window_flow(w, q)) throw Error(Errc::NotAFlow, "window assignment leaks at an interior vertex");
  const LevelSpan span = level_span(w);
  const Throughput t = throughput(w, q);
  const CircularMapperGraph& g = w.base();
  FiberProfile profile;
  bool first = true;
  for (int r = 0; r <= w.decks(); ++r) {
    for (int i = 0; i < g.n; ++i) {
      FiberVector f{i, r, QVector(g.layer_sizes[static_cast<std::size_t>(i)])};
      const bool bottom = w.level({i, r, 0}) == span.bottom;
      for (int k = 0; k < f.entries.size(); ++k) {
        const int v = w.vertex_index({i, r, k});
        f.entries(k) = bottom ? t.out(v) : t.in(v);
      }
      const Rational sum = f.entries.sum();
      if (first) {
        profile.value = sum;
        first = false;
      } else if (sum != profile.value) {
        throw Error(Errc::InconsistentLevel, "layer " + std::to_string(i + 1) + " at deck " + std::to_string(r) +
                                                 " carries " + to_string(sum) + ", expected " + to_string(profile.value));
      }
      profile.vectors.push_back(std::move(f));
    }
  }
  return profile;
}

std::pair<int, int> find_repeat(const FiberProfile& profile, int n, int layer) {
  const int decks = n == 0 ? 0 : static_cast<int>(profile.vectors.size()) / n;
  for (int r2 = 1; r2 < decks; ++r2) {
    for (int r1 = 0; r1 < r2; ++r1) {
      if (profile.at(layer, r1, n).entries == profile.at(layer, r2, n).entries) return {r1, r2};
    }
  }
  throw Error(Errc::NoRepeatInWindow, "no two decks share the same fiber vector; enlarge the window");
}

QVector average_flow(const WindowGraph& w, const QVector& q, int r1, int r2) {
  if (r1 < 0 || r2 <= r1 || r2 > w.decks()) {
    throw Error(Errc::PreconditionViolated, "averaging range must satisfy 0 <= r1 < r2 <= R");
  }
  const FiberProfile profile = fiber_vectors(w, q);
  const int n = w.base().n;
  if (profile.at(0, r1, n).entries != profile.at(0, r2, n).entries) {
    throw Error(Errc::PreconditionViolated, "fiber vectors at decks " + std::to_string(r1) + " and " +
                                                std::to_string(r2) + " differ");
  }
  const Rational decks(r2 - r1);
  QVector s = QVector::Zero(static_cast<Eigen::Index>(w.base().edge_count()));
  for (std::size_t b = 0; b < w.base().edge_count(); ++b) {
    for (int u = r1; u < r2; ++u) {
      s(static_cast<Eigen::Index>(b)) += q(static_cast<Eigen::Index>(*w.edge_index({b, u})));
    }
    s(static_cast<Eigen::Index>(b)) /= decks;
  }
  return s;
}

Integer rationalize_window(const WindowGraph& w, const QVector& q, int deck_lo, int deck_hi) {
  Integer lambda = 1;
  for (std::size_t k = 0; k < w.edge_count(); ++k) {
    const int deck = w.edges()[k].deck;
    if (deck < deck_lo || deck > deck_hi) continue;
    lambda = boost::multiprecision::lcm(lambda, denominator_of(q(static_cast<Eigen::Index>(k))));
  }
  return lambda;
}

RolledFlow roll_window_flow(const WindowGraph& w, const QVector& q, const QVector& caps) {
  RolledFlow out;
  out.value = fiber_vectors(w, q).value;
  out.scale = rationalize_window(w, q, 0, w.decks());
  const Rational lambda(out.scale);
  const QVector scaled = q * lambda;
  const auto [r1, r2] = find_repeat(fiber_vectors(w, scaled), w.base().n, 0);
  out.r1 = r1;
  out.r2 = r2;
  out.flow = average_flow(w, scaled, r1, r2) / lambda;

  const CircularMapperGraph& g = w.base();
  if (!is_flow(g, out.flow)) throw Error(Errc::TheoremCheckFailed, "averaged flow has nonzero boundary");
  if (!within_capacity(out.flow, caps)) throw Error(Errc::TheoremCheckFailed, "averaged flow exceeds a capacity");
  if (g.n > 0 && sliced_flow_value(g, out.flow) != out.value) {
    throw Error(Errc::TheoremCheckFailed, "averaged flow has sliced value " + to_string(sliced_flow_value(g, out.flow)) +
                                              ", window carries " + to_string(out.value));
  }
  return out;
}

}  // namespace slimap
