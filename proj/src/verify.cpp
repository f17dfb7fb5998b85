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

#include "slimap/verify.hpp"

#include "slimap/classical_flow.hpp"
#include "slimap/error.hpp"
#include "slimap/flow.hpp"
#include "slimap/linalg.hpp"
#include "slimap/random_instances.hpp"
#include "slimap/sliced_maxflow.hpp"
#include "slimap/unroll_periodic.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

namespace slimap {

std::size_t BatteryReport::failures() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const TrialRecord& t) { return !t.passed; }));
}

int thread_budget(const VerifyOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("SLIMAP_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

namespace {

using Trial = std::function<void(Rng&, TrialRecord&)>;

BatteryReport run_trials(std::string name, std::size_t trials, std::uint64_t seed, const VerifyOptions& options,
                         const Trial& trial) {
  BatteryReport report{std::move(name), seed, std::vector<TrialRecord>(trials)};
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < trials; i = next++) {
      TrialRecord& rec = report.trials[i];
      rec.index = i;
      rec.seed = derive_seed(seed, i);
      Rng rng(rec.seed);
      try {
        trial(rng, rec);
      } catch (const std::exception& e) {
        rec.passed = false;
        rec.detail = e.what();
      }
    }
  };
  const auto workers = std::min<std::size_t>(static_cast<std::size_t>(thread_budget(options)), trials);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return report;
}

Rational corrupt(const VerifyOptions& options, const char* target, Rational value) {
  if (options.fault == target) value += 1;
  return value;
}

void expect(TrialRecord& rec, bool ok, const std::string& what) {
  if (ok || !rec.passed) {
    return;
  }
  rec.passed = false;
  rec.detail = what;
}

}  // namespace

BatteryReport verify_homology(std::size_t trials, std::uint64_t seed, const VerifyOptions& options) {
  return run_trials("homology", trials, seed, options, [&](Rng& rng, TrialRecord& rec) {
    const CircularMapperGraph g = random_graph(rng, {});
    const auto basis = cycle_space_basis(g);
    const auto edges = static_cast<Eigen::Index>(g.edge_count());
    const Rational span = corrupt(options, "rank", Rational(span_dimension(basis, edges)));
    const Eigen::Index kernel = edges - linalg::rank(incidence_matrix(to_digraph(g)));
    const int rank = cycle_rank(g);
    rec.values = {{"edges", std::to_string(edges)},
                  {"vertices", std::to_string(vertex_count(g))},
                  {"cycle_rank", std::to_string(rank)},
                  {"span", to_string(span)}};
    rec.passed = true;
    expect(rec, span == rank, "span of the basis differs from |E| - |V| + #components");
    expect(rec, kernel == rank, "kernel of the boundary map differs from the cycle rank");
    expect(rec, std::all_of(basis.begin(), basis.end(), [&](const QVector& c) { return is_flow(g, c); }),
           "a basis element is not a circulation");
  });
}

BatteryReport verify_in_out(std::size_t trials, std::uint64_t seed, const VerifyOptions& options) {
  return run_trials("in_out", trials, seed, options, [&](Rng& rng, TrialRecord& rec) {
    const CircularMapperGraph g = random_graph(rng, {});
    const QVector s = random_circulation(rng, g);
    rec.passed = true;
    const Rational value = corrupt(options, "simplex", fiber_flow(g, s, 0).in);
    for (int i = 0; i < g.n; ++i) {
      const FiberFlow f = fiber_flow(g, s, i);
      expect(rec, f.in == f.out, "layer " + std::to_string(i + 1) + " has unequal in- and out-flow");
      expect(rec, f.in == value, "layer " + std::to_string(i + 1) + " differs from layer 1");
    }
    rec.values = {{"layers", std::to_string(g.n)}, {"value", to_string(value)}};
  });
}

BatteryReport verify_lp_oracle(std::size_t trials, std::uint64_t seed, const VerifyOptions& options) {
  return run_trials("lp_oracle", trials, seed, options, [&](Rng& rng, TrialRecord& rec) {
    const CircularMapperGraph g = random_oracle_graph(rng, 14);
    const Rational simplex = corrupt(options, "simplex", sliced_max_flow(g).value);
    const Rational oracle = brute_force_max_flow(g, g.capacities);
    rec.values = {{"augmented_edges", std::to_string(build_augmented(g).edges.size())},
                  {"simplex", to_string(simplex)},
                  {"oracle", to_string(oracle)}};
    rec.passed = true;
    expect(rec, simplex == oracle, "simplex and vertex enumeration disagree");
  });
}

BatteryReport verify_classic(const std::optional<CircularMapperGraph>& graph, int decks, std::size_t trials,
                             std::uint64_t seed, const VerifyOptions& options) {
  if (graph) require_valid(*graph);
  return run_trials("classic", trials, seed, options, [&](Rng& rng, TrialRecord& rec) {
    CircularMapperGraph g;
    int r = decks;
    if (graph) {
      g = *graph;
      if (rec.index > 0) {
        for (Rational& c : g.capacities) c = rng.integer(0, 5);
      }
    } else {
      g = random_graph(rng, {2, 4, 3, 50, 5, true});
      r = rng.integer(1, 2);
    }
    const WindowGraph w = unroll(g, r);
    ClassicReport report = classic_equivalence(w);
    report.ab_flow = corrupt(options, "simplex", report.ab_flow);
    rec.values = {{"decks", std::to_string(r)},
                  {"ab_flow", to_string(report.ab_flow)},
                  {"st_flow", to_string(report.st_flow)},
                  {"rolled_flow", to_string(report.rolled_flow)}};
    rec.passed = true;
    expect(rec, report.consistent(), std::string(name_of(Errc::MismatchFound)) + ": the three max-flow values differ");
  });
}

BatteryReport verify_unrolled(const std::optional<CircularMapperGraph>& graph, int decks, std::size_t trials,
                              std::uint64_t seed, const VerifyOptions& options) {
  if (graph) require_valid(*graph);
  return run_trials("unrolled", trials, seed, options, [&](Rng& rng, TrialRecord& rec) {
    CircularMapperGraph g;
    int r = decks;
    if (graph) {
      g = *graph;
    } else {
      g = random_graph(rng, {2, 4, 3, 60, 5, rng.chance(1, 2)});
      r = rng.integer(2, 4);
    }
    const WindowGraph w = unroll(g, r);
    const QVector& caps = g.capacities;
    const QVector base = random_feasible_flow(rng, g, caps);
    rec.passed = true;

    // Periodic lifts are fixed points of averaging.
    const QVector lifted = pullback_flow(w, base);
    const int r1 = rng.integer(0, r - 1);
    const int r2 = rng.integer(r1 + 1, r);
    expect(rec, average_flow(w, lifted, r1, r2) == base, "averaging a periodic lift changed it");

    std::string mode = "perturbed";
    std::optional<RolledFlow> rolled;
    for (int attempt = 0; attempt < 16 && !rolled; ++attempt) {
      try {
        rolled = roll_window_flow(w, random_window_flow(rng, w, base), caps);
      } catch (const Error& e) {
        if (e.code() != Errc::NoRepeatInWindow) throw;
      }
    }
    if (!rolled) {
      mode = "matched";
      rolled = roll_window_flow(w, random_matched_window_flow(rng, w, base), caps);
    }

    // The converse: the lifted optimum keeps its per-deck value.
    const SlicedMaxFlow best = sliced_max_flow(g, caps);
    const Rational best_value = corrupt(options, "simplex", best.value);
    const Rational lifted_value = fiber_vectors(w, pullback_flow(w, best.witness)).value;
    rec.values = {{"decks", std::to_string(r)},
                  {"mode", mode},
                  {"window_value", to_string(rolled->value)},
                  {"scale", rolled->scale.str()},
                  {"repeat", std::to_string(rolled->r1) + "," + std::to_string(rolled->r2)},
                  {"max_flow", to_string(best_value)}};
    expect(rec, lifted_value == best_value,
           std::string(name_of(Errc::TheoremCheckFailed)) + ": lifted witness lost its value");
    expect(rec, rolled->value <= best_value,
           std::string(name_of(Errc::TheoremCheckFailed)) + ": window flow beats the sliced maximum");
  });
}

BatteryReport verify_round_trip(std::size_t trials, std::uint64_t seed, const VerifyOptions& options) {
  return run_trials("round_trip", trials, seed, options, [&](Rng& rng, TrialRecord& rec) {
    const CircularMapperGraph g = random_graph(rng, {2, 5, 3, 50, 5, true});
    const AugmentedGraph ag = build_augmented(g);
    LPProblem<Rational> lp = assemble_lp(ag, g.capacities);

    // A random convex combination of three optimal vertices for random objectives.
    QVector point = QVector::Zero(lp.variable_count());
    Rational total = 0;
    for (int v = 0; v < 3; ++v) {
      for (Rational& c : lp.objective) c = rng.integer(-3, 3);
      const auto sol = simplex_solve(lp);
      if (sol.status != LPStatus::Optimal) throw Error(Errc::InternalInconsistency, "admissible set is bounded and nonempty");
      const Rational weight = rng.rational(1, 4, 3);
      point += weight * sol.point;
      total += weight;
    }
    point /= total;

    const QVector s = flow_from_adm(g, ag, point);
    const QVector back = adm_from_flow(g, ag, s);
    Rational source_total = 0;
    for (std::size_t k = 0; k < ag.edges.size(); ++k) {
      if (ag.edges[k].origin == EdgeOrigin::SourceStub) source_total += point(static_cast<Eigen::Index>(k));
    }
    const Rational value = corrupt(options, "simplex", g.n > 0 ? sliced_flow_value(g, s) : Rational(0));
    rec.values = {{"variables", std::to_string(lp.variable_count())}, {"value", to_string(value)}};
    rec.passed = true;
    expect(rec, back == point, "adm_from_flow(flow_from_adm(e)) != e");
    expect(rec, flow_from_adm(g, ag, back) == s, "flow_from_adm(adm_from_flow(s)) != s");
    expect(rec, within_capacity(s, g.capacities), "pushed-forward flow exceeds a capacity");
    expect(rec, value == source_total, "sliced value differs from the total source stub flow");
  });
}

}  // namespace slimap
