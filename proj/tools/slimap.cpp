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

#include "slimap/circle_cover.hpp"
#include "slimap/classical_flow.hpp"
#include "slimap/dot.hpp"
#include "slimap/error.hpp"
#include "slimap/flow.hpp"
#include "slimap/io.hpp"
#include "slimap/mapper.hpp"
#include "slimap/random_instances.hpp"
#include "slimap/sliced_maxflow.hpp"
#include "slimap/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>

namespace {

using slimap::io::json;

struct Inputs {
  std::string space, cover, graph, caps, flow, out, manifest, capacity = "point_count";
  int decks = 1;
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  std::size_t max_edges = 14;
  bool no_pairing = false;
};

class Run {
 public:
  Run(std::string command, const Inputs& in) : command_(std::move(command)), in_(in), start_(std::chrono::steady_clock::now()) {}

  json load(const std::string& path) {
    const std::string text = slimap::io::read_text_file(path);
    digests_.push_back({{"path", path}, {"sha256", slimap::io::sha256_hex(text)}});
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw slimap::Error(slimap::Errc::Parse, path + ": " + e.what());
    }
  }

  slimap::CircularMapperGraph graph() {
    slimap::CircularMapperGraph g = slimap::io::graph_from_json(load(in_.graph));
    if (!in_.caps.empty()) g.capacities = slimap::io::caps_from_json(load(in_.caps), g);
    return g;
  }

  void emit_text(const std::string& text, std::optional<std::uint64_t> seed = std::nullopt) {
    if (in_.out.empty()) {
      std::cout << text;
    } else {
      slimap::io::write_text_file(in_.out, text);
    }
    if (in_.manifest.empty()) return;
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_);
    json manifest = {{"command", command_},
                     {"inputs", digests_},
                     {"version", SLIMAP_VERSION},
                     {"wall_time_ms", elapsed.count()},
                     {"result_sha256", slimap::io::sha256_hex(text)}};
    manifest["seed"] = seed ? json(std::to_string(*seed)) : json(nullptr);
    slimap::io::write_text_file(in_.manifest, slimap::io::dump(manifest));
  }

  void emit(json result, std::optional<std::uint64_t> seed = std::nullopt) {
    result["command"] = command_;
    emit_text(slimap::io::dump(result), seed);
  }

 private:
  std::string command_;
  const Inputs& in_;
  std::chrono::steady_clock::time_point start_;
  json digests_ = json::array();
};

slimap::CapacityRule capacity_rule(const std::string& text) {
  if (text == "point_count") return slimap::CapacityRule::point_count();
  if (text.rfind("constant:", 0) == 0) return slimap::CapacityRule::constant_value(slimap::parse_rational(text.substr(9)));
  throw slimap::Error(slimap::Errc::Schema, "capacity rule is \"point_count\" or \"constant:<value>\"");
}

json battery_json(const slimap::BatteryReport& report) {
  json records = json::array();
  for (const auto& t : report.trials) {
    records.push_back({{"index", t.index},
                       {"seed", std::to_string(t.seed)},
                       {"passed", t.passed},
                       {"detail", t.detail},
                       {"values", t.values}});
  }
  return {{"battery", report.name},
          {"seed", std::to_string(report.seed)},
          {"trials", report.trials.size()},
          {"failures", report.failures()},
          {"passed", report.passed()},
          {"records", records}};
}

slimap::VerifyOptions verify_options() {
  slimap::VerifyOptions options;
  if (const char* fault = std::getenv("SLIMAP_FAULT_INJECT")) options.fault = fault;
  return options;
}

int finish_batteries(Run& run, const std::vector<slimap::BatteryReport>& reports, std::uint64_t seed) {
  json batteries = json::array();
  bool ok = true;
  for (const auto& r : reports) {
    batteries.push_back(battery_json(r));
    ok = ok && r.passed();
  }
  run.emit({{"passed", ok}, {"batteries", batteries}}, seed);
  if (!ok) std::cerr << "verification failed\n";
  return ok ? 0 : slimap::exit_code_of(slimap::Errc::MismatchFound);
}

json window_flow_json(const slimap::WindowGraph& w, const slimap::QVector& q) {
  json values = json::array();
  for (std::size_t k = 0; k < w.edge_count(); ++k) {
    values.push_back({{"edge", {{"base_edge", slimap::io::edge_address(w.base(), w.edges()[k].base_edge)},
                                {"deck", w.edges()[k].deck}}},
                      {"value", slimap::to_string(q(static_cast<Eigen::Index>(k)))}});
  }
  return values;
}

int mapper_build(const Inputs& in) {
  Run run("mapper build", in);
  const slimap::SampledSpace space = slimap::io::space_from_json(run.load(in.space));
  const slimap::ArcCover cover = slimap::validate_cover(slimap::io::arcs_from_json(run.load(in.cover)));
  const slimap::MapperGraph m = slimap::build_mapper(space, cover, capacity_rule(in.capacity));
  json g = slimap::io::to_json(m);
  run.emit_text(slimap::io::dump(g));
  return 0;
}

int flow_sliced_max(const Inputs& in) {
  Run run("flow sliced-max", in);
  const slimap::CircularMapperGraph g = run.graph();
  const slimap::SlicedMaxFlow result = slimap::sliced_max_flow(g);
  run.emit({{"value", slimap::to_string(result.value)},
            {"witness", slimap::io::flow_to_json(g, result.witness)},
            {"lp", {{"variables", result.stats.variables},
                    {"constraints", result.stats.constraints},
                    {"pivots", result.stats.pivots}}}});
  return 0;
}

int flow_st_max(const Inputs& in) {
  Run run("flow st-max", in);
  const json doc = run.load(in.graph);
  slimap::CircularMapperGraph g;
  int decks = in.decks;
  if (doc.is_object() && doc.value("schema", "") == "slimap/window/v1") {
    g = slimap::io::graph_from_json(doc.at("base"));
    decks = doc.at("decks").get<int>();
  } else {
    g = slimap::io::graph_from_json(doc);
  }
  if (!in.caps.empty()) g.capacities = slimap::io::caps_from_json(run.load(in.caps), g);
  const slimap::WindowGraph w = slimap::unroll(g, decks);
  const slimap::StGraph st = slimap::ab_flow_setup(w);
  const slimap::StMaxFlow result = slimap::st_max_flow(st);
  run.emit({{"value", slimap::to_string(result.value)},
            {"decks", decks},
            {"flow", window_flow_json(w, result.flow.head(static_cast<Eigen::Index>(w.edge_count())))}});
  return 0;
}

int flow_check(const Inputs& in) {
  Run run("flow check", in);
  const slimap::CircularMapperGraph g = run.graph();
  json doc = run.load(in.flow);
  if (doc.is_object() && doc.contains("witness")) doc = doc.at("witness");
  const slimap::QVector s = slimap::io::flow_from_json(doc, g);
  const bool flow = slimap::is_flow(g, s);
  json report = {{"is_flow", flow},
                 {"nonnegative", slimap::is_nonnegative_flow(g, s)},
                 {"within_capacity", slimap::within_capacity(s, g.capacities)}};
  report["value"] = flow ? json(slimap::to_string(slimap::sliced_flow_value(g, s))) : json(nullptr);
  run.emit(report);
  if (!flow) {
    std::cerr << "NotAFlow: assignment has nonzero boundary\n";
    return slimap::exit_code_of(slimap::Errc::NotAFlow);
  }
  if (!slimap::within_capacity(s, g.capacities)) {
    std::cerr << "ConstraintViolation: flow leaves the capacity box\n";
    return slimap::exit_code_of(slimap::Errc::ConstraintViolation);
  }
  return 0;
}

int graph_unroll(const Inputs& in) {
  Run run("graph unroll", in);
  const slimap::WindowGraph w = slimap::unroll(run.graph(), in.decks);
  run.emit_text(slimap::io::dump(slimap::io::to_json(w)));
  return 0;
}

int graph_export_dot(const Inputs& in, bool window) {
  Run run("graph export-dot", in);
  const slimap::CircularMapperGraph g = run.graph();
  std::optional<slimap::QVector> flow;
  if (!in.flow.empty()) {
    json doc = run.load(in.flow);
    if (doc.is_object() && doc.contains("witness")) doc = doc.at("witness");
    flow = slimap::io::flow_from_json(doc, g);
  }
  if (window) {
    const slimap::WindowGraph w = slimap::unroll(g, in.decks);
    std::optional<slimap::QVector> lifted;
    if (flow) {
      lifted = slimap::QVector(static_cast<Eigen::Index>(w.edge_count()));
      for (std::size_t k = 0; k < w.edge_count(); ++k) {
        (*lifted)(static_cast<Eigen::Index>(k)) = (*flow)(static_cast<Eigen::Index>(w.edges()[k].base_edge));
      }
    }
    run.emit_text(slimap::to_dot(w, lifted));
  } else {
    run.emit_text(slimap::to_dot(g, flow));
  }
  return 0;
}

std::optional<slimap::CircularMapperGraph> optional_graph(Run& run, const Inputs& in) {
  if (in.graph.empty()) return std::nullopt;
  return run.graph();
}

int verify(const Inputs& in, const std::string& which) {
  Run run("verify " + which, in);
  const auto options = verify_options();
  std::vector<slimap::BatteryReport> reports;
  if (which == "classic") {
    reports.push_back(slimap::verify_classic(optional_graph(run, in), in.decks, in.trials, in.seed, options));
  } else if (which == "unrolled") {
    reports.push_back(slimap::verify_unrolled(optional_graph(run, in), in.decks, in.trials, in.seed, options));
  } else {
    reports.push_back(slimap::verify_homology(in.trials, in.seed, options));
    reports.push_back(slimap::verify_in_out(in.trials, slimap::derive_seed(in.seed, 0x10), options));
  }
  return finish_batteries(run, reports, in.seed);
}

int oracle_brute(const Inputs& in) {
  Run run("oracle brute", in);
  const slimap::CircularMapperGraph g = run.graph();
  const slimap::Rational value = slimap::brute_force_max_flow(g, g.capacities, in.max_edges, {!in.no_pairing});
  run.emit({{"value", slimap::to_string(value)}, {"pairing", !in.no_pairing}});
  return 0;
}

void report_error(const std::string& code, const std::string& message) {
  std::cerr << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Circular mapper graphs and sliced max flow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(SLIMAP_VERSION));
  Inputs in;
  std::function<int()> action;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", in.out, "Output file (default: stdout)");
    cmd->add_option("--manifest", in.manifest, "Write a run manifest with input digests and timing");
  };
  auto add_graph = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--graph", in.graph, "Graph JSON");
    if (required) opt->required();
    cmd->add_option("--caps", in.caps, "Capacity JSON");
  };

  auto* mapper = app.add_subcommand("mapper", "Mapper construction")->require_subcommand(1);
  auto* build = mapper->add_subcommand("build", "Build the circular mapper graph");
  build->add_option("--space", in.space, "Sampled space JSON")->required();
  build->add_option("--cover", in.cover, "Arc cover JSON")->required();
  build->add_option("--capacity", in.capacity, "point_count or constant:<value>");
  add_out(build);
  build->callback([&] { action = [&] { return mapper_build(in); }; });

  auto* flow = app.add_subcommand("flow", "Max flows and flow checks")->require_subcommand(1);
  auto* sliced = flow->add_subcommand("sliced-max", "Sliced max flow");
  add_graph(sliced, true);
  add_out(sliced);
  sliced->callback([&] { action = [&] { return flow_sliced_max(in); }; });
  auto* st = flow->add_subcommand("st-max", "S-T max flow on a window");
  add_graph(st, true);
  st->add_option("--decks", in.decks, "Window decks when --graph is a base graph");
  add_out(st);
  st->callback([&] { action = [&] { return flow_st_max(in); }; });
  auto* check = flow->add_subcommand("check", "Validate a flow");
  add_graph(check, true);
  check->add_option("--flow", in.flow, "Flow JSON or a sliced-max result")->required();
  add_out(check);
  check->callback([&] { action = [&] { return flow_check(in); }; });

  auto* graph = app.add_subcommand("graph", "Graph utilities")->require_subcommand(1);
  auto* unroll = graph->add_subcommand("unroll", "Window of the unrolled graph");
  add_graph(unroll, true);
  unroll->add_option("--decks", in.decks, "Deck count R >= 1")->required();
  add_out(unroll);
  unroll->callback([&] { action = [&] { return graph_unroll(in); }; });
  auto* dot = graph->add_subcommand("export-dot", "Graphviz export");
  add_graph(dot, true);
  dot->add_option("--flow", in.flow, "Flow JSON to show next to capacities");
  auto* dot_decks = dot->add_option("--decks", in.decks, "Export the window over this many decks");
  add_out(dot);
  dot->callback([&, dot_decks] { action = [&, dot_decks] { return graph_export_dot(in, dot_decks->count() > 0); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Verification batteries")->require_subcommand(1);
  for (const char* name : {"classic", "unrolled", "homology"}) {
    auto* cmd = verify_cmd->add_subcommand(name, std::string("Run the ") + name + " battery");
    if (std::string(name) != "homology") {
      add_graph(cmd, false);
      cmd->add_option("--decks", in.decks, "Window decks");
    }
    cmd->add_option("--trials", in.trials, "Trial count");
    cmd->add_option("--seed", in.seed, "Master seed");
    add_out(cmd);
    const std::string which = name;
    cmd->callback([&, which] { action = [&, which] { return verify(in, which); }; });
  }

  auto* oracle = app.add_subcommand("oracle", "Independent oracles")->require_subcommand(1);
  auto* brute = oracle->add_subcommand("brute", "Sliced max flow by vertex enumeration");
  add_graph(brute, true);
  brute->add_option("--max-edges", in.max_edges, "Largest augmented graph to enumerate");
  brute->add_flag("--no-pairing", in.no_pairing, "Drop the source/target pairing rows");
  add_out(brute);
  brute->callback([&] { action = [&] { return oracle_brute(in); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : slimap::exit_code_of(slimap::Errc::Schema);
  }

  try {
    return action();
  } catch (const slimap::Error& e) {
    report_error(std::string(slimap::name_of(e.code())), e.what());
    return slimap::exit_code_of(e.code());
  } catch (const json::exception& e) {
    report_error("Schema", e.what());
    return slimap::exit_code_of(slimap::Errc::Schema);
  }
}
