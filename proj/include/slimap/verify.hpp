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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slimap {

struct VerifyOptions {
  int threads = 0;     // 0: SLIMAP_THREADS, else the hardware concurrency
  std::string fault;   // test hook: "simplex" corrupts solver values, "rank" corrupts ranks
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool passed = false;
  std::string detail;
  std::map<std::string, std::string> values;
};

struct BatteryReport {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<TrialRecord> trials;

  std::size_t failures() const;
  bool passed() const { return failures() == 0; }
};

/// Worker count for a battery: options.threads, else SLIMAP_THREADS, else
/// the hardware concurrency. Always at least 1.
int thread_budget(const VerifyOptions& options);

/// Cycle basis rank equals |E| - |V| + #components, and every basis element
/// is a circulation.
BatteryReport verify_homology(std::size_t trials, std::uint64_t seed, const VerifyOptions& options = {});

/// Random circulations have equal in- and out-flow on every layer, with one
/// common value.
BatteryReport verify_in_out(std::size_t trials, std::uint64_t seed, const VerifyOptions& options = {});

/// Simplex optimum equals the vertex-enumeration optimum on small instances.
BatteryReport verify_lp_oracle(std::size_t trials, std::uint64_t seed, const VerifyOptions& options = {});

/// (A,B) flow = S-T flow = sliced flow of the roll-up on windows. With a
/// graph, trial 0 uses its capacities and later trials draw integer
/// capacities in [0, 5]; without one, small random graphs and 1 or 2 decks.
BatteryReport verify_classic(const std::optional<CircularMapperGraph>& graph, int decks, std::size_t trials,
                             std::uint64_t seed, const VerifyOptions& options = {});

/// Rolls random feasible window flows back to base circulations and checks
/// feasibility and value; also checks that periodic lifts average back to
/// themselves and that the lifted sliced max-flow witness keeps its value.
BatteryReport verify_unrolled(const std::optional<CircularMapperGraph>& graph, int decks, std::size_t trials,
                              std::uint64_t seed, const VerifyOptions& options = {});

/// flow_from_adm and adm_from_flow are inverse on sampled admissible points.
BatteryReport verify_round_trip(std::size_t trials, std::uint64_t seed, const VerifyOptions& options = {});

}  // namespace slimap
