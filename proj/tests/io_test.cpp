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

#include "instances.hpp"

#include "slimap/dot.hpp"
#include "slimap/error.hpp"
#include "slimap/random_instances.hpp"

#include <gtest/gtest.h>

#include <filesystem>

namespace slimap {
namespace {

using io::json;

Errc error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return Errc::InternalInconsistency;
}

std::string golden(const std::string& name) { return io::read_text_file(std::string(SLIMAP_GOLDEN) + "/" + name); }

TEST(Json, Rationals) {
  EXPECT_EQ(io::rational_from_json(json("6/4")), Rational(3, 2));
  EXPECT_EQ(io::rational_from_json(json(-7)), -7);
  EXPECT_EQ(io::to_json(Rational(-3, 6)), json("-1/2"));
  EXPECT_EQ(error_of([] { io::rational_from_json(json(1.5)); }), Errc::Schema);
  EXPECT_EQ(error_of([] { io::rational_from_json(json("1/0")); }), Errc::Parse);
}

TEST(Json, DumpIsSortedAndTerminated) {
  const std::string text = io::dump(json{{"b", 1}, {"a", json::array({1, 2})}});
  EXPECT_EQ(text, "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
}

TEST(Json, StrictKeys) {
  EXPECT_EQ(error_of([] { io::arcs_from_json(json::parse(R"({"arcs":[],"extra":1})")); }), Errc::Schema);
  EXPECT_EQ(error_of([] { io::arcs_from_json(json::parse(R"({"arcs":[{"start":"0"}]})")); }), Errc::Schema);
  EXPECT_EQ(error_of([] { io::space_from_json(json::parse(R"({"points":[{"id":0,"angle":"0","w":1}]})")); }),
            Errc::Schema);
  EXPECT_EQ(error_of([] { io::space_from_json(json::parse(R"({"points":[],"neighbors":[[0]]})")); }), Errc::Schema);
  const json g = json::parse(R"({"n":1,"layer_sizes":[1],"edges":[{"layer":1,"from":1,"to":1,"color":"red"}]})");
  EXPECT_EQ(error_of([&] { io::graph_from_json(g); }), Errc::Schema);
}

TEST(Json, GraphReader) {
  const CircularMapperGraph g = io::graph_from_json(
      json::parse(R"({"n":2,"layer_sizes":[1,1],"edges":[{"layer":2,"from":1,"to":1,"cap":"5/2"},{"layer":1,"from":1,"to":1}]})"));
  ASSERT_EQ(g.edge_count(), 2U);
  EXPECT_FALSE(g.edges[0].wrap);
  EXPECT_TRUE(g.edges[1].wrap);
  EXPECT_EQ(g.capacities, (QVector(2) << 1, Rational(5, 2)).finished());

  const json bad_wrap = json::parse(R"({"n":2,"layer_sizes":[1,1],"edges":[{"layer":1,"from":1,"to":1,"wrap":true}]})");
  EXPECT_EQ(error_of([&] { io::graph_from_json(bad_wrap); }), Errc::Schema);
  const json bad_layer = json::parse(R"({"n":2,"layer_sizes":[1,1],"edges":[{"layer":3,"from":1,"to":1}]})");
  EXPECT_EQ(error_of([&] { io::graph_from_json(bad_layer); }), Errc::Schema);
  const json bad_rank = json::parse(R"({"n":2,"layer_sizes":[1,1],"edges":[{"layer":1,"from":2,"to":1}]})");
  EXPECT_EQ(error_of([&] { io::graph_from_json(bad_rank); }), Errc::InvalidGraph);
  const json bad_schema = json::parse(R"({"schema":"other","n":1,"layer_sizes":[1],"edges":[]})");
  EXPECT_EQ(error_of([&] { io::graph_from_json(bad_schema); }), Errc::Schema);
}

TEST(Json, CapsAndFlows) {
  const CircularMapperGraph g = testing::hexagon(1);
  const QVector caps = io::caps_from_json(
      json::parse(R"({"default":"3","edges":[{"edge":{"layer":3,"from":2,"to":1},"value":"1/2"}]})"), g);
  EXPECT_EQ(caps.head(5), constant_vector(5, 3));
  EXPECT_EQ(caps(5), Rational(1, 2));
  EXPECT_EQ(error_of([&] { io::caps_from_json(json::parse(R"({"default":"-1"})"), g); }), Errc::NegativeCapacity);
  EXPECT_EQ(error_of([&] {
              io::caps_from_json(json::parse(R"({"edges":[{"edge":{"layer":3,"from":1,"to":1},"value":"1"}]})"), g);
            }),
            Errc::InvalidEdge);

  QVector s(6);
  s << 1, Rational(2, 3), 1, Rational(2, 3), 1, Rational(2, 3);
  EXPECT_EQ(io::flow_from_json(io::flow_to_json(g, s), g), s);
  json partial = io::flow_to_json(g, s);
  partial["values"].erase(0);
  EXPECT_EQ(error_of([&] { io::flow_from_json(partial, g); }), Errc::Schema);
}

TEST(Json, Files) {
  EXPECT_EQ(error_of([] { io::read_json_file("/nonexistent/slimap.json"); }), Errc::Io);
  const auto path = std::filesystem::temp_directory_path() / "slimap_io_test.json";
  io::write_text_file(path, "{ not json");
  EXPECT_EQ(error_of([&] { io::read_json_file(path); }), Errc::Parse);
  std::filesystem::remove(path);
}

TEST(Json, Sha256) {
  EXPECT_EQ(io::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(io::sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST(Json, MapperGolden) {
  const MapperGraph m = build_mapper(testing::squaring_space(), testing::three_arc_cover());
  EXPECT_EQ(io::dump(io::to_json(m)), golden("z2_mapper.json"));
  EXPECT_EQ(io::dump(io::to_json(m)), io::read_text_file(testing::fixture("hexagon.json")));
}

TEST(Json, WindowDocument) {
  const json w = io::to_json(unroll(testing::hexagon(), 1));
  EXPECT_EQ(w.at("schema"), "slimap/window/v1");
  EXPECT_EQ(w.at("vertices").size(), 12U);
  EXPECT_EQ(w.at("edges").size(), 10U);
  EXPECT_EQ(io::graph_from_json(w.at("base")).edge_count(), 6U);
}

TEST(Dot, Goldens) {
  const CircularMapperGraph g = io::graph_from_json(io::read_json_file(testing::fixture("hexagon.json")));
  EXPECT_EQ(to_dot(g), golden("hexagon.dot"));
  EXPECT_EQ(to_dot(unroll(g, 1)), golden("hexagon_window1.dot"));
}

TEST(Dot, Structure) {
  const std::string dot = to_dot(testing::hexagon(), constant_vector(6, 3));
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = dot.find(needle); at != std::string::npos; at = dot.find(needle, at + 1)) ++n;
    return n;
  };
  EXPECT_EQ(count("rank=same"), 3U);
  EXPECT_EQ(count(" -> "), 6U);
  EXPECT_EQ(count("style=dashed"), 2U);
  EXPECT_EQ(count("xlabel=\"3\""), 6U);
  EXPECT_EQ(count("cluster_deck"), 0U);
  EXPECT_EQ(to_dot(unroll(testing::hexagon(), 2)).find("cluster_deck_2") != std::string::npos, true);
}

TEST(JsonProperty, GraphRoundTrip) {
  Rng rng(2468);
  for (int trial = 0; trial < 50; ++trial) {
    const CircularMapperGraph g = random_graph(rng, {1, 5, 4, 50, 9, rng.chance(1, 2)});
    const std::string text = io::dump(io::to_json(g));
    const CircularMapperGraph back = io::graph_from_json(json::parse(text));
    EXPECT_EQ(back.layer_sizes, g.layer_sizes);
    EXPECT_EQ(back.edges, g.edges);
    EXPECT_EQ(back.capacities, g.capacities);
    EXPECT_EQ(io::dump(io::to_json(back)), text);

    QVector s(static_cast<Eigen::Index>(g.edge_count()));
    for (Rational& x : s) x = rng.rational(-3, 3, 9);
    EXPECT_EQ(io::flow_from_json(io::flow_to_json(g, s), g), s);
  }
}

}  // namespace
}  // namespace slimap
