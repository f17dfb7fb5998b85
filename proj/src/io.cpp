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

#include "slimap/io.hpp"

#include "slimap/error.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

namespace slimap::io {

namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(Errc::Schema, where + ": " + what);
}

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) schema_error(where, "expected an object");
  std::set<std::string> allowed;
  for (const char* k : required) {
    allowed.insert(k);
    if (!j.contains(k)) schema_error(where, std::string("missing key \"") + k + "\"");
  }
  for (const char* k : optional) allowed.insert(k);
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) schema_error(where, "unknown key \"" + item.key() + "\"");
  }
}

const json& array_at(const json& j, const char* key, const std::string& where) {
  const json& a = j.at(key);
  if (!a.is_array()) schema_error(where, std::string("\"") + key + "\" must be an array");
  return a;
}

long long integer_at(const json& j, const char* key, const std::string& where) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) schema_error(where, std::string("\"") + key + "\" must be an integer");
  return v.get<long long>();
}

int index_at(const json& j, const char* key, const std::string& where) {
  const long long v = integer_at(j, key, where);
  if (v < 1 || v > 1'000'000'000) schema_error(where, std::string("\"") + key + "\" must be a positive index");
  return static_cast<int>(v - 1);
}

std::size_t edge_from_address(const json& j, const CircularMapperGraph& g, const std::string& where) {
  check_keys(j, where, {"layer", "from", "to"});
  const EdgeSpec spec{index_at(j, "layer", where), index_at(j, "from", where), index_at(j, "to", where)};
  if (spec.layer >= g.n) schema_error(where, "layer out of range");
  return edge_index(g, spec);
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, path.string() + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text) || !out.flush()) throw Error(Errc::Io, "cannot write " + path.string());
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(Errc::Schema, "rational values are strings \"p/q\" or integers");
}

json to_json(const Rational& value) { return to_string(value); }

std::vector<Arc> arcs_from_json(const json& j) {
  check_keys(j, "cover", {"arcs"});
  std::vector<Arc> arcs;
  for (const json& a : array_at(j, "arcs", "cover")) {
    check_keys(a, "cover.arcs[]", {"start", "length"});
    arcs.push_back({Angle(rational_from_json(a.at("start"))), rational_from_json(a.at("length"))});
  }
  return arcs;
}

json to_json(const ArcCover& cover) {
  json arcs = json::array();
  for (std::size_t i = 0; i < cover.size(); ++i) {
    arcs.push_back({{"start", to_json(cover.arcs[i].start.value())},
                    {"length", to_json(cover.arcs[i].length)},
                    {"private_point", to_json(cover.private_points[i].value())},
                    {"cut_point", to_json(cover.cut_points[i])}});
  }
  return {{"arcs", arcs}};
}

SampledSpace space_from_json(const json& j) {
  check_keys(j, "space", {"points"}, {"neighbors"});
  SampledSpace space;
  for (const json& p : array_at(j, "points", "space")) {
    check_keys(p, "space.points[]", {"id", "angle"});
    space.points.push_back({integer_at(p, "id", "space.points[]"), Angle(rational_from_json(p.at("angle")))});
  }
  if (j.contains("neighbors")) {
    for (const json& e : array_at(j, "neighbors", "space")) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        schema_error("space.neighbors[]", "expected a pair of point ids");
      }
      space.neighbors.emplace_back(e[0].get<PointId>(), e[1].get<PointId>());
    }
  }
  return space;
}

CircularMapperGraph graph_from_json(const json& j) {
  check_keys(j, "graph", {"n", "layer_sizes", "edges"}, {"schema", "metadata", "vertices"});
  if (j.contains("schema") && j.at("schema") != "slimap/graph/v1") schema_error("graph", "unsupported schema");
  const long long n = integer_at(j, "n", "graph");
  std::vector<int> sizes;
  for (const json& m : array_at(j, "layer_sizes", "graph")) {
    if (!m.is_number_integer() || m.get<long long>() < 0) schema_error("graph.layer_sizes", "sizes are nonnegative integers");
    sizes.push_back(m.get<int>());
  }
  if (n < 0 || static_cast<std::size_t>(n) != sizes.size()) schema_error("graph", "n must equal the number of layer sizes");

  std::vector<Edge> edges;
  std::vector<Rational> caps;
  for (const json& e : array_at(j, "edges", "graph")) {
    const std::string where = "graph.edges[]";
    check_keys(e, where, {"layer", "from", "to"}, {"wrap", "cap"});
    const int layer = index_at(e, "layer", where);
    if (layer >= n) schema_error(where, "layer out of range");
    const int head_layer = static_cast<int>((layer + 1) % n);
    const bool wrap = head_layer == 0 && layer == n - 1;
    if (e.contains("wrap") && (!e.at("wrap").is_boolean() || e.at("wrap").get<bool>() != wrap)) {
      schema_error(where, "\"wrap\" must be true exactly on edges out of the last layer");
    }
    edges.push_back({{layer, index_at(e, "from", where)}, {head_layer, index_at(e, "to", where)}, wrap});
    caps.push_back(e.contains("cap") ? rational_from_json(e.at("cap")) : Rational(1));
  }
  QVector c = Eigen::Map<const QVector>(caps.data(), static_cast<Eigen::Index>(caps.size()));
  CircularMapperGraph g = make_graph(std::move(sizes), std::move(edges), std::move(c));
  if (j.contains("metadata")) {
    const json& meta = j.at("metadata");
    check_keys(meta, "graph.metadata", {}, {"capacity_rule", "warnings"});
    if (meta.contains("capacity_rule")) g.metadata.capacity_rule = meta.at("capacity_rule").get<std::string>();
    if (meta.contains("warnings")) {
      for (const json& w : meta.at("warnings")) g.metadata.warnings.push_back(w.get<std::string>());
    }
  }
  if (j.contains("vertices")) array_at(j, "vertices", "graph");
  require_valid(g);
  return g;
}

json edge_address(const CircularMapperGraph& g, std::size_t k) {
  const Edge& e = g.edges[k];
  return {{"layer", e.tail.layer + 1}, {"from", e.tail.rank + 1}, {"to", e.head.rank + 1}};
}

json to_json(const CircularMapperGraph& g) {
  json edges = json::array();
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    json e = edge_address(g, k);
    e["wrap"] = g.edges[k].wrap;
    e["cap"] = to_json(g.capacities(static_cast<Eigen::Index>(k)));
    edges.push_back(std::move(e));
  }
  json meta = {{"capacity_rule", g.metadata.capacity_rule}, {"warnings", g.metadata.warnings}};
  return {{"schema", "slimap/graph/v1"}, {"n", g.n}, {"layer_sizes", g.layer_sizes}, {"edges", edges}, {"metadata", meta}};
}

json to_json(const MapperGraph& m) {
  json j = to_json(m.graph);
  json vertices = json::array();
  for (const MapperVertex& v : m.vertices) {
    vertices.push_back({{"layer", v.layer + 1}, {"rank", v.rank + 1}, {"members", v.members}});
  }
  j["vertices"] = vertices;
  return j;
}

QVector caps_from_json(const json& j, const CircularMapperGraph& g) {
  check_keys(j, "caps", {}, {"default", "edges"});
  QVector caps = g.capacities;
  if (j.contains("default")) caps.setConstant(rational_from_json(j.at("default")));
  if (j.contains("edges")) {
    for (const json& e : array_at(j, "edges", "caps")) {
      check_keys(e, "caps.edges[]", {"edge", "value"});
      caps(static_cast<Eigen::Index>(edge_from_address(e.at("edge"), g, "caps.edges[].edge"))) =
          rational_from_json(e.at("value"));
    }
  }
  for (const Rational& c : caps) {
    if (c < 0) throw Error(Errc::NegativeCapacity, "capacity " + to_string(c) + " is negative");
  }
  return caps;
}

QVector flow_from_json(const json& j, const CircularMapperGraph& g) {
  check_keys(j, "flow", {"values"}, {"value"});
  QVector s(static_cast<Eigen::Index>(g.edge_count()));
  std::vector<bool> seen(g.edge_count(), false);
  for (const json& e : array_at(j, "values", "flow")) {
    check_keys(e, "flow.values[]", {"edge", "value"});
    const std::size_t k = edge_from_address(e.at("edge"), g, "flow.values[].edge");
    if (seen[k]) schema_error("flow.values[]", "edge listed twice");
    seen[k] = true;
    s(static_cast<Eigen::Index>(k)) = rational_from_json(e.at("value"));
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) schema_error("flow", "every edge needs a value");
  return s;
}

json flow_to_json(const CircularMapperGraph& g, const QVector& s) {
  json values = json::array();
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    values.push_back({{"edge", edge_address(g, k)}, {"value", to_json(s(static_cast<Eigen::Index>(k)))}});
  }
  return {{"values", values}};
}

json to_json(const WindowGraph& w) {
  auto address = [](const WindowVertex& v) {
    return json{{"layer", v.layer + 1}, {"deck", v.deck}, {"rank", v.rank + 1}};
  };
  json vertices = json::array();
  for (int v = 0; v < w.vertex_count(); ++v) vertices.push_back(address(w.vertex(v)));
  json edges = json::array();
  const QVector caps = w.capacities();
  for (std::size_t k = 0; k < w.edge_count(); ++k) {
    const WindowEdge& e = w.edges()[k];
    edges.push_back({{"base_edge", edge_address(w.base(), e.base_edge)},
                     {"deck", e.deck},
                     {"tail", address(w.tail(e))},
                     {"head", address(w.head(e))},
                     {"cap", to_json(caps(static_cast<Eigen::Index>(k)))}});
  }
  return {{"schema", "slimap/window/v1"}, {"decks", w.decks()}, {"base", to_json(w.base())},
          {"vertices", vertices}, {"edges", edges}};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::Io, "SHA-256 digest failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

}  // namespace slimap::io
