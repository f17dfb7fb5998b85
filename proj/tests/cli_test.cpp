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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>

namespace slimap {
namespace {

namespace fs = std::filesystem;
using io::json;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("slimap_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(const std::string& args, const std::string& env = "") {
    const fs::path out = dir_ / "stdout.txt";
    const fs::path err = dir_ / "stderr.txt";
    const std::string cmd = env + " " + SLIMAP_CLI + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, io::read_text_file(out), io::read_text_file(err)};
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::string write(const std::string& name, const std::string& text) const {
    io::write_text_file(dir_ / name, text);
    return path(name);
  }

  static std::string fixture(const std::string& name) { return testing::fixture(name); }
  static std::string golden(const std::string& name) {
    return io::read_text_file(std::string(SLIMAP_GOLDEN) + "/" + name);
  }

  fs::path dir_;
};

TEST_F(Cli, MapperBuildGoldens) {
  const Result z2 = run("mapper build --space " + fixture("z2_space.json") + " --cover " + fixture("three_arcs.json"));
  EXPECT_EQ(z2.code, 0) << z2.err;
  EXPECT_EQ(z2.out, golden("z2_mapper.json"));
  const Result id = run("mapper build --space " + fixture("identity_space.json") + " --cover " + fixture("three_arcs.json"));
  EXPECT_EQ(id.code, 0);
  EXPECT_EQ(id.out, golden("identity_mapper.json"));
  const Result constant = run("mapper build --space " + fixture("z2_space.json") + " --cover " +
                              fixture("three_arcs.json") + " --capacity constant:3");
  EXPECT_EQ(json::parse(constant.out).at("edges").at(0).at("cap"), "3");
}

TEST_F(Cli, MapperBuildErrors) {
  const std::string broken = write("broken.json", "{\"points\": [");
  EXPECT_EQ(run("mapper build --space " + broken + " --cover " + fixture("three_arcs.json")).code, 3);
  EXPECT_EQ(run("mapper build --space " + path("missing.json") + " --cover " + fixture("three_arcs.json")).code, 3);

  const Result bad = run("mapper build --space " + fixture("z2_space.json") + " --cover " + fixture("two_arcs.json"));
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(json::parse(bad.err).at("error").at("code"), "DisconnectedIntersection");
  EXPECT_EQ(run("mapper build --space " + fixture("z2_space.json") + " --cover " + fixture("three_arcs.json") +
                " --capacity weird")
                .code,
            2);
}

TEST_F(Cli, SlicedMaxAndCheck) {
  const std::string graph = fixture("hexagon.json");
  const Result r = run("flow sliced-max --graph " + graph + " --caps " + fixture("caps3.json") + " --out " + path("r.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  const json result = io::read_json_file(path("r.json"));
  EXPECT_EQ(result.at("value"), "6");

  const Result check = run("flow check --graph " + graph + " --caps " + fixture("caps3.json") + " --flow " + path("r.json"));
  EXPECT_EQ(check.code, 0) << check.err;
  EXPECT_EQ(json::parse(check.out).at("value"), "6");
  // The witness carries 3 per edge; the fixture's own capacities are 1.
  EXPECT_EQ(run("flow check --graph " + graph + " --flow " + path("r.json")).code, 2);

  const std::string zero = write("zero.json", "{\"default\": \"0\"}");
  EXPECT_EQ(json::parse(run("flow sliced-max --graph " + graph + " --caps " + zero).out).at("value"), "0");

  json leak = result.at("witness");
  leak["values"][0]["value"] = "1";
  const std::string leak_path = write("leak.json", io::dump(leak));
  EXPECT_EQ(run("flow check --graph " + graph + " --caps " + fixture("caps3.json") + " --flow " + leak_path).code, 4);

  const Result brute = run("oracle brute --graph " + graph + " --caps " + fixture("caps3.json"));
  EXPECT_EQ(brute.code, 0) << brute.err;
  EXPECT_EQ(json::parse(brute.out).at("value"), "6");
}

TEST_F(Cli, StMax) {
  const Result r = run("flow st-max --graph " + fixture("hexagon.json") + " --caps " + fixture("caps3.json") + " --decks 1");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out).at("value"), "6");
}

TEST_F(Cli, GraphCommands) {
  const std::string graph = fixture("hexagon.json");
  EXPECT_EQ(run("graph export-dot --graph " + graph).out, golden("hexagon.dot"));
  EXPECT_EQ(run("graph export-dot --graph " + graph + " --decks 1").out, golden("hexagon_window1.dot"));
  const Result window = run("graph unroll --graph " + graph + " --decks 1");
  EXPECT_EQ(window.code, 0);
  EXPECT_EQ(json::parse(window.out).at("edges").size(), 10U);
  EXPECT_EQ(run("graph unroll --graph " + graph + " --decks 0").code, 2);
}

TEST_F(Cli, VerifyBatteries) {
  for (const char* battery : {"classic", "unrolled", "homology"}) {
    const Result empty = run(std::string("verify ") + battery + " --trials 0");
    EXPECT_EQ(empty.code, 0) << battery << empty.err;
    EXPECT_TRUE(json::parse(empty.out).at("passed").get<bool>());
    const Result some = run(std::string("verify ") + battery + " --trials 5 --seed 3");
    EXPECT_EQ(some.code, 0) << battery << some.err;
  }
  const Result fixture_run = run("verify unrolled --graph " + fixture("hexagon.json") + " --caps " + fixture("caps3.json") +
                                 " --decks 3 --trials 10");
  EXPECT_EQ(fixture_run.code, 0) << fixture_run.err;
}

TEST_F(Cli, FaultInjectionFails) {
  EXPECT_EQ(run("verify homology --trials 3", "SLIMAP_FAULT_INJECT=simplex").code, 5);
  EXPECT_EQ(run("verify homology --trials 3", "SLIMAP_FAULT_INJECT=rank").code, 5);
  EXPECT_EQ(run("verify classic --trials 3", "SLIMAP_FAULT_INJECT=simplex").code, 5);
  EXPECT_EQ(run("verify unrolled --trials 3", "SLIMAP_FAULT_INJECT=simplex").code, 5);
}

TEST_F(Cli, ThreadCountDoesNotChangeResults) {
  const Result one = run("verify classic --trials 8 --seed 12", "SLIMAP_THREADS=1");
  const Result many = run("verify classic --trials 8 --seed 12", "SLIMAP_THREADS=4");
  EXPECT_EQ(one.out, many.out);
}

TEST_F(Cli, Manifest) {
  const Result r = run("flow sliced-max --graph " + fixture("hexagon.json") + " --out " + path("r.json") + " --manifest " +
                       path("m.json"));
  ASSERT_EQ(r.code, 0);
  const json m = io::read_json_file(path("m.json"));
  EXPECT_EQ(m.at("command"), "flow sliced-max");
  EXPECT_EQ(m.at("inputs").size(), 1U);
  EXPECT_EQ(m.at("inputs").at(0).at("sha256"), io::sha256_hex(io::read_text_file(fixture("hexagon.json"))));
  EXPECT_EQ(m.at("result_sha256"), io::sha256_hex(io::read_text_file(path("r.json"))));
  EXPECT_TRUE(m.at("seed").is_null());
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("flow").code, 2);
  EXPECT_EQ(run("flow sliced-max").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

}  // namespace
}  // namespace slimap
