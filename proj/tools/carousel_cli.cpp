// Copyright 2026 The Authors.
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

// carousel: command-line front end for the sweeps, fixtures and renderer.
//
// Exit status: 0 when every trial passes, 1 when some fail, 2 on usage or
// input errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include "carousel/harness.hpp"
#include "carousel/lattice.hpp"
#include "carousel/svg.hpp"

namespace {

using carousel::Error;
using carousel::ErrorCode;
using carousel::Json;
using carousel::Scenario;
using carousel::ScenarioKind;

constexpr int kUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  int trials = -1;  // -1: the verb's default
  double eps = 1e-9;
  std::string out;
  std::string format = "txt";
  int threads = 0;
  bool no_timing = false;
};

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, path + ": " + e.what());
  }
}

void Emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error(ErrorCode::kParseError, "cannot write " + g.out);
  f << text;
}

int Report(const Globals& g, const carousel::SweepReport& r) {
  const bool timing = !g.no_timing;
  Emit(g, g.format == "csv" ? carousel::ToCsv(r, timing) : carousel::ToText(r, timing));
  if (!g.out.empty()) {
    std::fprintf(stderr, "trials=%d passes=%d failures=%zu indeterminate=%d\n", r.trials,
                 r.passes, r.failures.size(), r.indeterminate);
  }
  return r.failures.empty() ? 0 : 1;
}

Scenario MakeScenario(const Globals& g, ScenarioKind kind, int default_trials) {
  Scenario sc;
  sc.kind = kind;
  sc.seed = g.seed;
  sc.trials = g.trials >= 0 ? g.trials : default_trials;
  sc.tol.eps = g.eps;
  sc.threads = g.threads;
  return sc;
}

int RunOne(const Globals& g, const Scenario& sc, int replay) {
  if (replay < 0) return Report(g, carousel::RunScenario(sc));
  carousel::SweepReport r;
  r.trials = 1;
  r.records.push_back(carousel::RunTrial(sc, replay));
  const auto& t = r.records.front();
  if (t.verdict == carousel::Verdict::kPass) ++r.passes;
  if (t.verdict == carousel::Verdict::kFail) r.failures.push_back(t.trial);
  if (t.verdict == carousel::Verdict::kIndeterminate) ++r.indeterminate;
  return Report(g, r);
}

// Labelled points or disks: {"points": [{"label": "a", "at": [x, y]}, ...]}
// or {"disks": [{"label": "c", "center": [x, y], "radius": r}, ...]}.
carousel::ClosureSystem ClosureFromConfig(const Json& cfg, carousel::Tolerance tol) {
  std::vector<std::string> labels;
  auto label = [&](const Json& e) {
    labels.push_back(e.contains("label") ? e.at("label").get<std::string>()
                                         : "e" + std::to_string(labels.size()));
  };
  try {
    if (cfg.contains("points")) {
      std::vector<carousel::Point> pts;
      for (const auto& e : cfg.at("points")) {
        label(e);
        pts.push_back(carousel::PointFromJson(e.at("at")));
      }
      return carousel::PointClosure(std::move(pts), std::move(labels));
    }
    if (cfg.contains("disks")) {
      std::vector<carousel::Disk> disks;
      for (const auto& e : cfg.at("disks")) {
        label(e);
        disks.push_back(carousel::DiskFromJson(e));
      }
      return carousel::CircleClosure(std::move(disks), tol, std::move(labels));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  throw Error(ErrorCode::kParseError, "config needs \"points\" or \"disks\"");
}

int ConvexGeoConfig(const Globals& g, const std::string& path, const std::string& lattice_out) {
  const carousel::ClosureSystem cs = ClosureFromConfig(ReadJsonFile(path), {g.eps});
  const auto ax = carousel::VerifyClosureAxioms(cs);
  const auto ae = carousel::VerifyAntiExchange(cs);
  std::ostringstream os;
  os << "elements=" << cs.size() << " closed_sets=" << cs.closed_sets().size()
     << " axioms=" << (ax.ok ? "ok" : "fail") << " anti_exchange=" << (ae.ok ? "ok" : "fail")
     << " indeterminate=" << cs.indeterminate();
  if (ax.violation) {
    os << " axiom_violation=" << carousel::ToString(ax.violation->axiom) << ":" << ax.violation->x;
  }
  if (ae.violation) {
    os << " violation=(" << cs.labels()[ae.violation->p] << "," << cs.labels()[ae.violation->q]
       << "," << ae.violation->x << ")";
  }
  bool jd = true;
  std::string adjacency;
  if (cs.size() <= carousel::kMaxLatticeGround) {
    const auto lat = carousel::MakeClosedSetLattice(cs);
    jd = carousel::IsJoinDistributive(lat.lattice);
    os << " join_distributive=" << jd;
    adjacency = carousel::ToAdjacencyText(lat.lattice);
  }
  os << "\n";
  if (!lattice_out.empty()) {
    std::ofstream f(lattice_out, std::ios::binary);
    if (!f) throw Error(ErrorCode::kParseError, "cannot write " + lattice_out);
    f << adjacency;
  } else {
    os << adjacency;
  }
  Emit(g, os.str());
  return ax.ok && ae.ok && jd && !cs.indeterminate() ? 0 : 1;
}

int DumpFixtures(const std::string& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& name : carousel::FixtureNames()) {
    std::ofstream f(std::filesystem::path(dir) / (name + ".json"), std::ios::binary);
    if (!f) throw Error(ErrorCode::kParseError, "cannot write into " + dir);
    f << carousel::FixtureData(name).dump(2) << "\n";
  }
  std::ofstream f(std::filesystem::path(dir) / "equilateral-triangle.json", std::ios::binary);
  f << carousel::EquilateralTriangleJson().dump(2) << "\n";
  return 0;
}

carousel::Point ParsePoint(const std::string& text) {
  double x = 0, y = 0;
  char comma = 0;
  std::istringstream is(text);
  if (!(is >> x >> comma >> y) || comma != ',') {
    throw Error(ErrorCode::kParseError, "expected x,y but got \"" + text + "\"");
  }
  return {x, y};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Witness search, carousel grids, convex geometries and renders."};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Scenario seed; trial i uses SplitMix64(seed ^ i)");
  app.add_option("--trials", g.trials, "Number of trials")->check(CLI::NonNegativeNumber);
  app.add_option("--eps", g.eps, "Tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"csv", "txt"}));
  app.add_option("--threads", g.threads, "Worker threads (0: all cores)");
  app.add_flag("--no-timing", g.no_timing, "Leave timing fields empty");

  int replay = -1;

  auto* theorem = app.add_subcommand("verify-theorem", "Random witness-search sweep");
  std::vector<std::string> bodies;
  double margin = 1e-3;
  bool shrink = false;
  std::string instance;
  theorem->add_option("--bodies", bodies, "Body kinds: disk disks3 polygon singleton");
  theorem->add_option("--margin", margin, "Inclusion margin required of generated bodies");
  theorem->add_flag("--shrink", shrink, "Also compute the largest shrink parameter");
  theorem->add_option("--instance", instance, "Check one instance file instead of a sweep");
  theorem->add_option("--replay", replay, "Rerun a single trial");

  auto* carousel_cmd = app.add_subcommand("carousel", "Carousel rule on interior grids");
  int grid = 6;
  carousel_cmd->add_option("--grid", grid, "Grid resolution")->check(CLI::Range(3, 64));
  carousel_cmd->add_option("--replay", replay, "Rerun a single trial");

  auto* approx = app.add_subcommand("approx", "Edge-free approximation by disk intersections");
  int disks = 200;
  double target = 0.05;
  std::vector<std::string> approx_bodies;
  approx->add_option("--disks", disks, "Disks per sequence")->check(CLI::Range(1, 100000));
  approx->add_option("--target", target, "Abundance to reach");
  approx->add_option("--bodies", approx_bodies, "Bodies: square triangle disk");
  approx->add_option("--replay", replay, "Rerun a single trial");

  auto* convexgeo = app.add_subcommand("convexgeo", "Closure axioms, anti-exchange, lattices");
  int max_points = 8, max_disks = 6, lattice_disks = 5;
  std::string config, lattice_out;
  convexgeo->add_option("--points", max_points, "Largest point configuration")
      ->check(CLI::Range(1, carousel::kMaxGround));
  convexgeo->add_option("--disks", max_disks, "Largest disk configuration")
      ->check(CLI::Range(1, carousel::kMaxGround));
  convexgeo->add_option("--lattice-disks", lattice_disks, "Largest configuration for lattices");
  convexgeo->add_option("--config", config, "Check one labelled configuration file");
  convexgeo->add_option("--lattice", lattice_out, "With --config: write the lattice here");
  convexgeo->add_option("--replay", replay, "Rerun a single trial");

  auto* crossing = app.add_subcommand("crossing", "Crossing study on random disk pairs");
  crossing->add_option("--replay", replay, "Rerun a single trial");

  auto* fixtures = app.add_subcommand("fixtures", "Run or dump the committed fixtures");
  std::vector<std::string> names;
  std::string dump;
  fixtures->add_option("--name", names, "Fixtures to run (default all)");
  fixtures->add_option("--dump", dump, "Write fixture data as JSON into this directory");

  auto* render = app.add_subcommand("render", "SVG of an instance");
  std::string render_instance, comet;
  int render_trial = 0;
  bool no_witness = false;
  render->add_option("--instance", render_instance, "Instance file (default: generated)");
  render->add_option("--trial", render_trial, "Generated theorem trial to draw");
  render->add_option("--comet", comet, "Add the comet of the first body lit from x,y");
  render->add_flag("--no-witness", no_witness, "Skip the witness hull");

  auto* run = app.add_subcommand("run", "Run a scenario file");
  std::string scenario_file;
  run->add_option("--scenario", scenario_file, "Scenario JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*theorem) {
      if (!instance.empty()) {
        const auto inst = carousel::TheoremInstanceFromJson(ReadJsonFile(instance));
        carousel::SweepReport r;
        r.trials = 1;
        r.records.push_back(carousel::CheckTheoremInstance(inst, {g.eps}, shrink));
        r.records.front().instance = carousel::ToJson(inst);
        if (r.records.front().verdict == carousel::Verdict::kPass) {
          r.passes = 1;
        } else {
          r.failures.push_back(0);
        }
        return Report(g, r);
      }
      Scenario sc = MakeScenario(g, ScenarioKind::kTheoremSweep, 1000);
      if (!bodies.empty()) sc.params["bodies"] = bodies;
      sc.params["margin"] = margin;
      sc.params["shrink"] = shrink;
      return RunOne(g, sc, replay);
    }
    if (*carousel_cmd) {
      Scenario sc = MakeScenario(g, ScenarioKind::kCarouselGrid, 100);
      sc.params["grid"] = grid;
      return RunOne(g, sc, replay);
    }
    if (*approx) {
      Scenario sc = MakeScenario(g, ScenarioKind::kApproxStudy, 2);
      sc.params["disks"] = disks;
      sc.params["target"] = target;
      if (!approx_bodies.empty()) sc.params["bodies"] = approx_bodies;
      return RunOne(g, sc, replay);
    }
    if (*convexgeo) {
      if (!config.empty()) return ConvexGeoConfig(g, config, lattice_out);
      Scenario sc = MakeScenario(g, ScenarioKind::kConvexGeoCheck, 200);
      sc.params["points"] = max_points;
      sc.params["disks"] = max_disks;
      sc.params["lattice_disks"] = lattice_disks;
      return RunOne(g, sc, replay);
    }
    if (*crossing) return RunOne(g, MakeScenario(g, ScenarioKind::kCrossingStudy, 500), replay);
    if (*fixtures) {
      if (!dump.empty()) return DumpFixtures(dump);
      Scenario sc = MakeScenario(g, ScenarioKind::kFixture, 0);
      if (!names.empty()) sc.params["names"] = names;
      return RunOne(g, sc, -1);
    }
    if (*render) {
      // A comet needs a nucleus with interior.
      carousel::GeneratorOptions comet_options;
      if (!comet.empty()) comet_options.bodies = {"disk", "disks3", "polygon"};
      const carousel::TheoremInstance inst =
          render_instance.empty()
              ? carousel::GenerateTheoremInstance(g.seed, static_cast<std::uint64_t>(render_trial),
                                                  comet_options)
              : carousel::TheoremInstanceFromJson(ReadJsonFile(render_instance));
      carousel::Scene scene;
      scene.triangle = inst.tri;
      scene.bodies = {inst.u0, inst.u1};
      if (!no_witness) {
        const carousel::Triangle tri(inst.tri[0], inst.tri[1], inst.tri[2]);
        const auto ws = carousel::WitnessSearch(inst.u0, inst.u1, tri, {g.eps});
        if (!ws.empty()) scene.witness = ws.front();
      }
      if (!comet.empty()) scene.comets.push_back({ParsePoint(comet), inst.u0});
      Emit(g, carousel::RenderSvg(scene));
      return 0;
    }
    if (*run) {
      Scenario sc = carousel::ScenarioFromJson(ReadJsonFile(scenario_file));
      sc.threads = g.threads;
      return Report(g, carousel::RunScenario(sc));
    }
  } catch (const Error& e) {
    std::fprintf(stderr, "carousel: %s\n", e.what());
    return kUsage;
  }
  return kUsage;
}
