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

#include "slimap/circle_cover.hpp"
#include "slimap/graph.hpp"
#include "slimap/mapper.hpp"
#include "slimap/rational.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace slimap::io {

using json = nlohmann::json;

// Every reader rejects unknown keys and throws Error(Schema) on malformed
// content. Layers, ranks and arc numbers are 1-based in JSON.

json read_json_file(const std::filesystem::path& path);  // Io, Parse
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Two-space indented, keys sorted, trailing newline.
std::string dump(const json& j);

Rational rational_from_json(const json& j);
json to_json(const Rational& value);

std::vector<Arc> arcs_from_json(const json& j);
json to_json(const ArcCover& cover);

SampledSpace space_from_json(const json& j);

CircularMapperGraph graph_from_json(const json& j);
json to_json(const CircularMapperGraph& g);
json to_json(const MapperGraph& m);

/// {"default": c, "edges": [{"edge": {...}, "value": c}]}; both keys
/// optional. Entries start from the graph's own capacities.
QVector caps_from_json(const json& j, const CircularMapperGraph& g);

/// {"values": [{"edge": {"layer", "from", "to"}, "value"}]}, one entry per edge.
QVector flow_from_json(const json& j, const CircularMapperGraph& g);
json flow_to_json(const CircularMapperGraph& g, const QVector& s);

json edge_address(const CircularMapperGraph& g, std::size_t k);

json to_json(const WindowGraph& w);

std::string sha256_hex(const std::string& bytes);

}  // namespace slimap::io
