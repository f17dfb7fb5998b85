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

#include <optional>
#include <string>

namespace slimap {

/// Graphviz source: one rank per layer, wrap edges dashed, capacities as
/// edge labels and flow values (when given) as external labels.
std::string to_dot(const CircularMapperGraph& g, const std::optional<QVector>& flow = std::nullopt);

/// Same for a window, with one cluster per deck.
std::string to_dot(const WindowGraph& w, const std::optional<QVector>& flow = std::nullopt);

}  // namespace slimap
