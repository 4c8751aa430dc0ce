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

// Instance generators and randomized sweeps.
//
// Trial i of a scenario with seed s draws everything from TrialRng(s, i), so
// any trial can be rerun alone. Trials run on a small thread pool and the
// records are put back in trial order before anything is reported.
//
// Scenario files are JSON:
//
//   {"kind": "theorem-sweep", "seed": 1, "trials": 100, "eps": 1e-9,
//    "params": {...}}
//
// Parameters per kind (all optional):
//   theorem-sweep     "bodies": subset of ["disk", "disks3", "polygon",
//                     "singleton"], "margin": 1e-3, "shrink": false
//   carousel-grid     "grid": 6
//   approx-study      "disks": 200, "target": 0.05, "bodies": ["square",
//                     "triangle"]
//   convexgeo-check   "points": 8, "disks": 6, "lattice_disks": 5
//   crossing-study    (none)
//   fixture           "names": list of fixture names, default all

#ifndef CAROUSEL_HARNESS_HPP_
#define CAROUSEL_HARNESS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carousel/rng.hpp"
#include "carousel/serialize.hpp"
#include "carousel/theorem.hpp"

namespace carousel {

enum class ScenarioKind {
  kTheoremSweep,
  kCarouselGrid,
  kApproxStudy,
  kConvexGeoCheck,
  kCrossingStudy,
  kFixture,
};
std::string_view ToString(ScenarioKind k);
/// ParseError on unknown names.
ScenarioKind ParseScenarioKind(std::string_view name);

struct Scenario {
  ScenarioKind kind = ScenarioKind::kTheoremSweep;
  std::uint64_t seed = 1;
  int trials = 100;
  Tolerance tol;
  Json params = Json::object();
  int threads = 0;  // 0: hardware concurrency; not serialized
};
Json ToJson(const Scenario& sc);
Scenario ScenarioFromJson(const Json& j);

enum class Verdict { kPass, kFail, kIndeterminate };
std::string_view ToString(Verdict v);

struct TrialRecord {
  int trial = 0;
  ScenarioKind kind = ScenarioKind::kTheoremSweep;
  std::uint64_t seed = 0;
  Verdict verdict = Verdict::kPass;
  std::optional<Witness> witness;
  std::optional<double> xi_max;
  double eps_used = 0;
  double millis = 0;
  std::string detail;  // one line, deterministic
  Json instance;       // full dump, kept for failures
};

struct SweepReport {
  int trials = 0;
  int passes = 0;
  std::vector<int> failures;
  int indeterminate = 0;
  double millis = 0;
  std::vector<TrialRecord> records;
};

/// Generated theorem instance: bodies strictly inside the triangle with
/// inclusion margin above the requested one, and u1 = m(u0).
struct TheoremInstance {
  std::array<Point, 3> tri;
  std::string body_kind;
  ConvexBody u0;
  Map m;
  ConvexBody u1;
};
Json ToJson(const TheoremInstance& inst);
TheoremInstance TheoremInstanceFromJson(const Json& j);

struct GeneratorOptions {
  std::vector<std::string> bodies = {"disk", "disks3", "polygon", "singleton"};
  double margin = 1e-3;
};
/// Rejection sampling; GenerationFailed after 100 attempts.
TheoremInstance GenerateTheoremInstance(std::uint64_t seed, std::uint64_t trial,
                                        const GeneratorOptions& opt = {});

/// Random CCW triangle with vertices in [-10, 10]^2 and all angles at least
/// 15 degrees.
std::array<Point, 3> RandomTriangle(SplitMix64& rng);

/// Triangle plus interior grid for the carousel study.
struct CarouselGridInstance {
  std::array<Point, 3> tri;
  std::vector<Point> points;
};
CarouselGridInstance GenerateCarouselGrid(std::uint64_t seed, std::uint64_t trial, int grid);

/// Verdict for u0, u1 in tri: witnesses at tol.eps, else retried at 1e-6.
TrialRecord CheckTheoremInstance(const TheoremInstance& inst, Tolerance tol, bool shrink);

/// Runs one trial; a failure record replays through this.
TrialRecord RunTrial(const Scenario& sc, int trial);
SweepReport RunScenario(const Scenario& sc);

/// Columns trial,kind,seed,verdict,witness_j,witness_k,xi_max,eps_used,millis.
std::string ToCsv(const SweepReport& r, bool timing = true);
/// Summary line plus one line per record.
std::string ToText(const SweepReport& r, bool timing = true);

/// Named counterexamples and reference instances.
std::vector<std::string> FixtureNames();
/// Runs a fixture; pass means it reproduces the documented behaviour.
TrialRecord RunFixture(std::string_view name, Tolerance tol = {});
/// The data behind a fixture, as written to fixtures/<name>.json.
Json FixtureData(std::string_view name);

/// The equilateral triangle (6,0), (-3, 3 sqrt3), (-3, -3 sqrt3) with the
/// irrational coordinates kept symbolic.
Json EquilateralTriangleJson();

}  // namespace carousel

#endif  // CAROUSEL_HARNESS_HPP_
