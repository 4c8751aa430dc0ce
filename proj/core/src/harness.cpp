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

#include "carousel/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "carousel/lattice.hpp"
#include "carousel/rng.hpp"

namespace carousel {
namespace {

constexpr int kMaxAttempts = 100;
constexpr double kRetryEps = 1e-6;

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class T>
T Param(const Json& params, const char* key, T fallback) {
  if (!params.is_object() || !params.contains(key)) return fallback;
  try {
    return params.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("parameter ") + key + ": " + e.what());
  }
}

double Area2(const std::array<Point, 3>& t) { return Cross(t[1] - t[0], t[2] - t[0]); }

double MinAngle(const std::array<Point, 3>& t) {
  double best = 10;
  for (int i = 0; i < 3; ++i) {
    const Point u = t[(i + 1) % 3] - t[i], v = t[(i + 2) % 3] - t[i];
    best = std::min(best, std::acos(std::clamp(Dot(u, v) / (Norm(u) * Norm(v)), -1.0, 1.0)));
  }
  return best;
}

Point RandomInterior(SplitMix64& rng, const std::array<Point, 3>& t) {
  double a = rng.uniform(), b = rng.uniform();
  if (a + b > 1) {
    a = 1 - a;
    b = 1 - b;
  }
  return t[0] + a * (t[1] - t[0]) + b * (t[2] - t[0]);
}

ConvexBody RandomBody(SplitMix64& rng, const std::string& kind, const Point& c, double s) {
  if (kind == "disk") return ConvexBody::MakeDisk(c, s);
  if (kind == "disks3") {
    std::vector<Disk> disks;
    for (int i = 0; i < 3; ++i) {
      disks.push_back({c + 0.5 * s * UnitAt(rng.uniform(0, kTwoPi)), s});
    }
    return ConvexBody::MakeDiskIntersection(std::move(disks));
  }
  if (kind == "polygon") {
    const int n = static_cast<int>(rng.between(3, 8));
    std::vector<double> angles;
    for (int i = 0; i < n; ++i) angles.push_back(rng.uniform(0, kTwoPi));
    std::sort(angles.begin(), angles.end());
    std::vector<Point> pts;
    for (double a : angles) pts.push_back(c + s * rng.uniform(0.3, 1.0) * UnitAt(a));
    return ConvexBody::MakePolygon(pts);
  }
  if (kind == "singleton") return ConvexBody::Singleton(c);
  throw Error(ErrorCode::kPreconditionViolated, "unknown body kind \"" + kind + "\"");
}

std::string WitnessText(const std::vector<Witness>& ws) {
  std::string s;
  for (const auto& w : ws) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(w.j) + "," + std::to_string(w.k) + ")";
  }
  return s.empty() ? "none" : s;
}

TrialRecord FailRecord(std::string detail) {
  TrialRecord r;
  r.verdict = Verdict::kFail;
  r.detail = std::move(detail);
  return r;
}

TrialRecord TheoremTrial(const Scenario& sc, int trial) {
  GeneratorOptions opt;
  opt.bodies = Param(sc.params, "bodies", opt.bodies);
  opt.margin = Param(sc.params, "margin", opt.margin);
  const TheoremInstance inst = GenerateTheoremInstance(sc.seed, trial, opt);
  TrialRecord r = CheckTheoremInstance(inst, sc.tol, Param(sc.params, "shrink", false));
  r.instance = ToJson(inst);
  return r;
}

TrialRecord CarouselTrial(const Scenario& sc, int trial) {
  const CarouselGridInstance g = GenerateCarouselGrid(sc.seed, trial, Param(sc.params, "grid", 6));
  const Triangle tri(g.tri[0], g.tri[1], g.tri[2]);
  TrialRecord r;
  int pairs = 0, bad = 0;
  for (std::size_t a = 0; a < g.points.size(); ++a) {
    for (std::size_t b = 0; b < g.points.size(); ++b) {
      if (a == b) continue;
      const Witness w = CarouselWitness(g.points[a], g.points[b], tri);
      if (!r.witness) r.witness = w;
      ++pairs;
      const bool ok = WitnessHolds(ConvexBody::Singleton(g.points[a]),
                                   ConvexBody::Singleton(g.points[b]), g.tri, w, Tolerance::Exact());
      bad += ok ? 0 : 1;
    }
  }
  r.verdict = bad == 0 ? Verdict::kPass : Verdict::kFail;
  r.eps_used = 0;
  r.detail = "points=" + std::to_string(g.points.size()) + " pairs=" + std::to_string(pairs) +
             " bad=" + std::to_string(bad);
  r.instance = {{"triangle", ToJson(g.tri)}, {"grid", Param(sc.params, "grid", 6)}};
  return r;
}

TrialRecord ApproxTrial(const Scenario& sc, int trial) {
  const auto bodies =
      Param(sc.params, "bodies", std::vector<std::string>{"square", "triangle"});
  const int n_max = Param(sc.params, "disks", 200);
  const double target = Param(sc.params, "target", 0.05);
  const std::string& kind = bodies[static_cast<std::size_t>(trial) % bodies.size()];
  SplitMix64 rng = TrialRng(sc.seed, static_cast<std::uint64_t>(trial));
  ConvexBody u = ConvexBody::MakePolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  if (kind == "triangle") {
    // Same scale as the square: bounding box with longer side 1.
    auto t = RandomTriangle(rng);
    const double x0 = std::min({t[0].x, t[1].x, t[2].x}), y0 = std::min({t[0].y, t[1].y, t[2].y});
    const double side = std::max(std::max({t[0].x, t[1].x, t[2].x}) - x0,
                                 std::max({t[0].y, t[1].y, t[2].y}) - y0);
    for (auto& p : t) p = Point{(p.x - x0) / side, (p.y - y0) / side};
    u = ConvexBody::MakePolygon({t[0], t[1], t[2]});
  } else if (kind == "disk") {
    u = ConvexBody::MakeDisk(rng.point_in_box(-5, 5), rng.uniform(0.5, 3));
  } else if (kind != "square") {
    throw Error(ErrorCode::kPreconditionViolated, "unknown approx body \"" + kind + "\"");
  }
  CoveringDiskSequence seq(u);
  const std::vector<Disk> disks = seq.take(n_max);
  TrialRecord r;
  std::optional<ConvexBody> prev;
  double prev_ab = 1e300, last_ab = 0;
  int first_below = 0;
  bool nested = true, edge_free = true, monotone = true;
  for (int n = 1; n <= n_max; ++n) {
    const ConvexBody un = ConvexBody::MakeDiskIntersection(
        std::vector<Disk>(disks.begin(), disks.begin() + n));
    nested = nested && Includes(un, u, sc.tol) && (!prev || Includes(*prev, un, sc.tol));
    edge_free = edge_free && IsEdgeFree(un, sc.tol);
    last_ab = Abundance(u, un, sc.tol);
    monotone = monotone && last_ab <= prev_ab + 1e-12;
    if (first_below == 0 && last_ab < target) first_below = n;
    prev_ab = last_ab;
    prev = un;
  }
  r.verdict = nested && edge_free && monotone && first_below > 0 ? Verdict::kPass : Verdict::kFail;
  r.eps_used = sc.tol.eps;
  std::ostringstream os;
  os << "body=" << kind << " first_below=" << first_below << " abundance=" << FormatDouble(last_ab)
     << " nested=" << nested << " edge_free=" << edge_free << " monotone=" << monotone;
  r.detail = os.str();
  r.instance = {{"body", ToJson(u)}, {"disks", n_max}, {"target", target}};
  return r;
}

TrialRecord ConvexGeoTrial(const Scenario& sc, int trial) {
  SplitMix64 rng = TrialRng(sc.seed, static_cast<std::uint64_t>(trial));
  TrialRecord r;
  const bool points = trial % 2 == 0;
  std::optional<ClosureSystem> cs;
  Json inst;
  int n = 0;
  if (points) {
    n = static_cast<int>(rng.between(1, Param(sc.params, "points", 8)));
    std::vector<Point> pts;
    while (static_cast<int>(pts.size()) < n) {
      const Point p{static_cast<double>(rng.between(0, 6)), static_cast<double>(rng.between(0, 6))};
      if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    Json list = Json::array();
    for (const auto& p : pts) list.push_back(ToJson(p));
    inst = {{"points", list}};
    cs = PointClosure(std::move(pts));
  } else {
    n = static_cast<int>(rng.between(1, Param(sc.params, "disks", 6)));
    std::vector<Disk> disks;
    for (int i = 0; i < n; ++i) disks.push_back({rng.point_in_box(0, 10), rng.uniform(0.2, 2.0)});
    Json list = Json::array();
    for (const auto& d : disks) list.push_back(ToJson(d));
    inst = {{"disks", list}};
    cs = CircleClosure(std::move(disks), sc.tol);
  }
  const AxiomReport ax = VerifyClosureAxioms(*cs);
  const AntiExchangeReport ae = VerifyAntiExchange(*cs);
  bool jd = true;
  const bool lattice = points || n <= Param(sc.params, "lattice_disks", 5);
  if (lattice) jd = IsJoinDistributive(MakeClosedSetLattice(*cs).lattice);
  r.eps_used = sc.tol.eps;
  if (!points && cs->indeterminate()) {
    r.verdict = Verdict::kIndeterminate;
  } else {
    r.verdict = ax.ok && ax.empty_closed && ae.ok && jd ? Verdict::kPass : Verdict::kFail;
  }
  std::ostringstream os;
  os << (points ? "points=" : "disks=") << n << " closed=" << cs->closed_sets().size()
     << " axioms=" << ax.ok << " anti_exchange=" << ae.ok;
  if (lattice) os << " join_distributive=" << jd;
  r.detail = os.str();
  r.instance = inst;
  return r;
}

TrialRecord CrossingTrial(const Scenario& sc, int trial) {
  SplitMix64 rng = TrialRng(sc.seed, static_cast<std::uint64_t>(trial));
  const Disk a{rng.point_in_box(0, 10), rng.uniform(0.2, 3)};
  const Disk b{rng.point_in_box(0, 10), rng.uniform(0.2, 3)};
  const CrossingAnalysis c = AnalyzeCrossing(ConvexBody::MakeDisk(a.center, a.radius),
                                             ConvexBody::MakeDisk(b.center, b.radius), sc.tol);
  TrialRecord r;
  r.verdict = c.crossing ? Verdict::kFail : Verdict::kPass;
  r.eps_used = sc.tol.eps;
  r.detail = "runs=" + std::to_string(c.outside_runs_0) + "," + std::to_string(c.outside_runs_1) +
             " crossing=" + std::to_string(c.crossing);
  r.instance = {{"disks", Json::array({ToJson(a), ToJson(b)})}};
  return r;
}

std::vector<std::string> FixtureSelection(const Scenario& sc) {
  return Param(sc.params, "names", FixtureNames());
}

ConvexBody Rect(double x0, double y0, double x1, double y1) {
  return ConvexBody::MakePolygon({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

}  // namespace

std::string_view ToString(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::kTheoremSweep: return "theorem-sweep";
    case ScenarioKind::kCarouselGrid: return "carousel-grid";
    case ScenarioKind::kApproxStudy: return "approx-study";
    case ScenarioKind::kConvexGeoCheck: return "convexgeo-check";
    case ScenarioKind::kCrossingStudy: return "crossing-study";
    case ScenarioKind::kFixture: return "fixture";
  }
  return "?";
}

ScenarioKind ParseScenarioKind(std::string_view name) {
  for (auto k : {ScenarioKind::kTheoremSweep, ScenarioKind::kCarouselGrid,
                 ScenarioKind::kApproxStudy, ScenarioKind::kConvexGeoCheck,
                 ScenarioKind::kCrossingStudy, ScenarioKind::kFixture}) {
    if (ToString(k) == name) return k;
  }
  throw Error(ErrorCode::kParseError, "unknown scenario kind \"" + std::string(name) + "\"");
}

std::string_view ToString(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kIndeterminate: return "indeterminate";
  }
  return "?";
}

Json ToJson(const Scenario& sc) {
  return {{"kind", ToString(sc.kind)},
          {"seed", sc.seed},
          {"trials", sc.trials},
          {"eps", sc.tol.eps},
          {"params", sc.params}};
}

Scenario ScenarioFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw Error(ErrorCode::kParseError, "scenario needs a kind");
  }
  Scenario sc;
  try {
    sc.kind = ParseScenarioKind(j.at("kind").get<std::string>());
    sc.seed = j.value("seed", sc.seed);
    sc.trials = j.value("trials", sc.trials);
    sc.tol.eps = j.value("eps", sc.tol.eps);
    sc.params = j.value("params", Json::object());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (sc.trials < 0) throw Error(ErrorCode::kParseError, "trials must be nonnegative");
  if (!(sc.tol.eps >= 0)) throw Error(ErrorCode::kParseError, "eps must be nonnegative");
  return sc;
}

Json ToJson(const TheoremInstance& inst) {
  return {{"triangle", ToJson(inst.tri)},
          {"body_kind", inst.body_kind},
          {"u0", ToJson(inst.u0)},
          {"map", ToJson(inst.m)},
          {"u1", ToJson(inst.u1)}};
}

TheoremInstance TheoremInstanceFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("triangle") || !j.contains("u0") || !j.contains("map")) {
    throw Error(ErrorCode::kParseError, "instance needs triangle, u0 and map");
  }
  const ConvexBody u0 = BodyFromJson(j.at("u0"));
  const Map m = MapFromJson(j.at("map"));
  ConvexBody u1 = j.contains("u1") ? BodyFromJson(j.at("u1")) : TransformBody(m, u0);
  return {TriangleFromJson(j.at("triangle")), j.value("body_kind", std::string("given")), u0, m,
          std::move(u1)};
}

std::array<Point, 3> RandomTriangle(SplitMix64& rng) {
  constexpr double kMinAngle = 15.0 * std::numbers::pi / 180.0;
  while (true) {
    std::array<Point, 3> t{rng.point_in_box(-10, 10), rng.point_in_box(-10, 10),
                           rng.point_in_box(-10, 10)};
    if (Area2(t) < 0) std::swap(t[1], t[2]);
    if (Orient2d(t[0], t[1], t[2]) > 0 && MinAngle(t) >= kMinAngle) return t;
  }
}

TheoremInstance GenerateTheoremInstance(std::uint64_t seed, std::uint64_t trial,
                                        const GeneratorOptions& opt) {
  if (opt.bodies.empty()) throw Error(ErrorCode::kPreconditionViolated, "no body kinds");
  SplitMix64 rng = TrialRng(seed, trial);
  const std::array<Point, 3> t = RandomTriangle(rng);
  const ConvexBody tri = ConvexBody::MakePolygon({t[0], t[1], t[2]});
  const double perimeter = Dist(t[0], t[1]) + Dist(t[1], t[2]) + Dist(t[2], t[0]);
  const double inradius = Area2(t) / perimeter;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::string& kind = opt.bodies[rng.below(opt.bodies.size())];
    const Point c = RandomInterior(rng, t);
    const ConvexBody u0 = RandomBody(rng, kind, c, rng.uniform(0.05, 0.5) * inradius);
    // The map sends c to another interior point, which keeps most images
    // inside.
    const Point c1 = RandomInterior(rng, t);
    const bool homothety = rng.uniform() < 0.5;
    const double ratio = rng.uniform(0.3, 2.0);
    if (homothety && std::abs(ratio - 1) < 1e-3) continue;
    const Map m = homothety ? Map::Homothety((c1 - ratio * c) / (1 - ratio), ratio)
                            : Map::Translation(c1 - c);
    const ConvexBody u1 = TransformBody(m, u0);
    if (InclusionMargin(tri, u0) <= opt.margin || InclusionMargin(tri, u1) <= opt.margin) continue;
    return {t, kind, u0, m, u1};
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no instance within " + std::to_string(kMaxAttempts) + " attempts");
}

CarouselGridInstance GenerateCarouselGrid(std::uint64_t seed, std::uint64_t trial, int grid) {
  if (grid < 3 || grid > 64) throw Error(ErrorCode::kPreconditionViolated, "grid must be in [3, 64]");
  SplitMix64 rng = TrialRng(seed, trial);
  CarouselGridInstance g{RandomTriangle(rng), {}};
  for (int i = 1; i < grid; ++i) {
    for (int j = 1; i + j < grid; ++j) {
      const int k = grid - i - j;
      g.points.push_back((i * g.tri[0] + j * g.tri[1] + k * g.tri[2]) / static_cast<double>(grid));
    }
  }
  return g;
}

TrialRecord CheckTheoremInstance(const TheoremInstance& inst, Tolerance tol, bool shrink) {
  TrialRecord r;
  const Triangle tri(inst.tri[0], inst.tri[1], inst.tri[2]);
  std::vector<Witness> ws = WitnessSearch(inst.u0, inst.u1, tri, tol);
  r.eps_used = tol.eps;
  if (ws.empty() && tol.eps < kRetryEps) {
    r.eps_used = kRetryEps;
    ws = WitnessSearch(inst.u0, inst.u1, tri, Tolerance{kRetryEps});
  }
  r.verdict = ws.empty() ? Verdict::kFail : Verdict::kPass;
  if (!ws.empty()) r.witness = ws.front();
  r.detail = "body=" + inst.body_kind +
             " map=" + (inst.m.is_translation() ? "translation" : "homothety") +
             " witnesses=" + WitnessText(ws);
  if (shrink) {
    const Point p0 = inst.u0.inner_point();
    try {
      const ShrinkResult s = MaxShrinkParameter(inst.u0, inst.u1, tri, p0, inst.m, tol);
      r.xi_max = s.xi_max;
      if (s.non_interval) r.detail += " non_interval";
    } catch (const Error& e) {
      r.detail += std::string(" shrink=") + std::string(ToString(e.code()));
    }
  }
  return r;
}

TrialRecord RunTrial(const Scenario& sc, int trial) {
  const auto t0 = Clock::now();
  TrialRecord r;
  try {
    switch (sc.kind) {
      case ScenarioKind::kTheoremSweep: r = TheoremTrial(sc, trial); break;
      case ScenarioKind::kCarouselGrid: r = CarouselTrial(sc, trial); break;
      case ScenarioKind::kApproxStudy: r = ApproxTrial(sc, trial); break;
      case ScenarioKind::kConvexGeoCheck: r = ConvexGeoTrial(sc, trial); break;
      case ScenarioKind::kCrossingStudy: r = CrossingTrial(sc, trial); break;
      case ScenarioKind::kFixture: {
        const auto names = FixtureSelection(sc);
        if (trial < 0 || trial >= static_cast<int>(names.size())) {
          throw Error(ErrorCode::kPreconditionViolated, "no fixture with that index");
        }
        r = RunFixture(names[trial], sc.tol);
        break;
      }
    }
  } catch (const Error& e) {
    r = FailRecord(e.what());
  }
  r.trial = trial;
  r.kind = sc.kind;
  r.seed = sc.seed;
  r.millis = Since(t0);
  return r;
}

SweepReport RunScenario(const Scenario& sc) {
  const auto t0 = Clock::now();
  const int trials =
      sc.kind == ScenarioKind::kFixture ? static_cast<int>(FixtureSelection(sc).size()) : sc.trials;
  SweepReport rep;
  rep.trials = trials;
  rep.records.resize(trials);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < trials; i = next++) rep.records[i] = RunTrial(sc, i);
  };
  int threads = sc.threads > 0 ? sc.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, std::max(1, trials));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  for (const auto& r : rep.records) {
    if (r.verdict == Verdict::kPass) ++rep.passes;
    if (r.verdict == Verdict::kFail) rep.failures.push_back(r.trial);
    if (r.verdict == Verdict::kIndeterminate) ++rep.indeterminate;
  }
  rep.millis = Since(t0);
  return rep;
}

std::string ToCsv(const SweepReport& r, bool timing) {
  std::ostringstream os;
  os << "trial,kind,seed,verdict,witness_j,witness_k,xi_max,eps_used,millis\n";
  for (const auto& t : r.records) {
    os << t.trial << ',' << ToString(t.kind) << ',' << t.seed << ',' << ToString(t.verdict) << ',';
    if (t.witness) {
      os << t.witness->j << ',' << t.witness->k;
    } else {
      os << ',';
    }
    os << ',' << (t.xi_max ? FormatDouble(*t.xi_max) : "") << ',' << FormatDouble(t.eps_used)
       << ',';
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", t.millis);
      os << buf;
    }
    os << '\n';
  }
  return os.str();
}

std::string ToText(const SweepReport& r, bool timing) {
  std::ostringstream os;
  os << "trials=" << r.trials << " passes=" << r.passes << " failures=" << r.failures.size()
     << " indeterminate=" << r.indeterminate;
  if (timing) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", r.millis);
    os << " millis=" << buf;
  }
  os << '\n';
  for (const auto& t : r.records) {
    os << "trial " << t.trial << ' ' << ToString(t.verdict);
    if (t.witness) os << " j=" << t.witness->j << " k=" << t.witness->k;
    if (t.xi_max) os << " xi_max=" << FormatDouble(*t.xi_max);
    os << " eps=" << FormatDouble(t.eps_used) << ' ' << t.detail << '\n';
    if (t.verdict == Verdict::kFail && !t.instance.is_null()) {
      os << "  instance " << t.instance.dump() << '\n';
    }
  }
  return os.str();
}

std::vector<std::string> FixtureNames() {
  return {"rectangle-tangency",  "disk-center-contact", "triangle-nonexample",
          "unit-square-segment", "plus-sign-crossing", "equilateral-incircle",
          "comet-unit-disk"};
}

Json EquilateralTriangleJson() { return Json::array({{6, 0}, {-3, "3*sqrt3"}, {-3, "-3*sqrt3"}}); }

Json FixtureData(std::string_view name) {
  if (name == "rectangle-tangency") {
    return {{"u0", ToJson(Rect(-2, 0, 2, 2))},
            {"maps", Json::array({ToJson(Map::Homothety({4, 2}, 0.5)),
                                  ToJson(Map::Translation({1, 0}))})}};
  }
  if (name == "disk-center-contact") {
    return {{"u0", ToJson(ConvexBody::MakeDisk({1, 0}, 1))},
            {"map", ToJson(Map::Homothety({2, 0}, 2))},
            {"expected_center", ToJson(Point{2, 0})}};
  }
  if (name == "triangle-nonexample") {
    const TriangleNonExample fx = TriangleNonExampleFixture();
    Json shapes = Json::array();
    for (const auto& s : fx.shapes) shapes.push_back(ToJson(s));
    return {{"shapes", shapes},
            {"violation", {{"p", fx.violation.p}, {"q", fx.violation.q}, {"x", fx.violation.x}}}};
  }
  if (name == "unit-square-segment") {
    return {{"body", ToJson(Rect(0, 0, 1, 1))},
            {"line", {{"anchor", ToJson(Point{0, 0})}, {"direction", ToJson(Point{1, 0})}}}};
  }
  if (name == "plus-sign-crossing") {
    return {{"u0", ToJson(Rect(-3, -1, 3, 1))}, {"u1", ToJson(Rect(-1, -3, 1, 3))}};
  }
  if (name == "equilateral-incircle") {
    return {{"triangle", EquilateralTriangleJson()},
            {"incircle", ToJson(ConvexBody::MakeDisk({0, 0}, 3))},
            {"inner", ToJson(ConvexBody::MakeDisk({0, 0}, 2.9))}};
  }
  if (name == "comet-unit-disk") {
    return {{"focus", ToJson(Point{3, 0})}, {"nucleus", ToJson(ConvexBody::MakeDisk({0, 0}, 1))}};
  }
  throw Error(ErrorCode::kPreconditionViolated, "unknown fixture \"" + std::string(name) + "\"");
}

TrialRecord RunFixture(std::string_view name, Tolerance tol) {
  const Json data = FixtureData(name);
  TrialRecord r;
  r.kind = ScenarioKind::kFixture;
  r.eps_used = tol.eps;
  r.instance = data;
  bool ok = false;
  std::ostringstream os;
  os << name << ':';
  if (name == "rectangle-tangency") {
    const ConvexBody u0 = BodyFromJson(data["u0"]);
    ok = true;
    for (const auto& mj : data["maps"]) {
      const Map m = MapFromJson(mj);
      const TangencyReport t = TangencyReportFor(u0, m, tol);
      bool edge_free_required = false;
      try {
        TangencyClassify(u0, m, tol);
      } catch (const Error& e) {
        edge_free_required = e.code() == ErrorCode::kEdgeFreeRequired;
      }
      ok = ok && t.internally_tangent && t.violates && edge_free_required;
      os << " tangent=" << t.internally_tangent << " violates=" << t.violates
         << " classify=" << (edge_free_required ? "EdgeFreeRequired" : "?");
    }
  } else if (name == "disk-center-contact") {
    const TangencyClass c =
        TangencyClassify(BodyFromJson(data["u0"]), MapFromJson(data["map"]), tol);
    const Point want = PointFromJson(data["expected_center"]);
    ok = c.kind == TangencyKind::kCenterContact && c.center == want && c.u0_in_u1 && !c.u1_in_u0;
    os << ' ' << ToString(c.kind) << " center=(" << FormatDouble(c.center.x) << ','
       << FormatDouble(c.center.y) << ") u0_in_u1=" << c.u0_in_u1;
  } else if (name == "triangle-nonexample") {
    const TriangleNonExample fx = TriangleNonExampleFixture();
    const AntiExchangeReport ae = VerifyAntiExchange(TriangleClosure(fx.shapes));
    ok = !ae.ok && ae.violation->p == fx.violation.p && ae.violation->q == fx.violation.q &&
         ae.violation->x == fx.violation.x;
    if (!ae.ok) {
      os << " p=" << ae.violation->p << " q=" << ae.violation->q << " x=" << ae.violation->x;
    }
  } else if (name == "unit-square-segment") {
    const Line l(PointFromJson(data["line"]["anchor"]),
                 Direction<double>(PointFromJson(data["line"]["direction"])));
    const LineBoundaryHit hit = LineBoundaryIntersections(BodyFromJson(data["body"]), l, tol);
    ok = hit.segment;
    os << " segment=" << hit.segment << " points=" << hit.points.size();
  } else if (name == "plus-sign-crossing") {
    const CrossingAnalysis c =
        AnalyzeCrossing(BodyFromJson(data["u0"]), BodyFromJson(data["u1"]), tol);
    ok = c.crossing;
    os << " runs=" << c.outside_runs_0 << ',' << c.outside_runs_1 << " crossing=" << c.crossing;
  } else if (name == "equilateral-incircle") {
    const auto t = TriangleFromJson(data["triangle"]);
    const ConvexBody tri = ConvexBody::MakePolygon({t[0], t[1], t[2]});
    const double m = InclusionMargin(tri, BodyFromJson(data["incircle"]));
    ok = std::abs(m) < 1e-12 && Includes(tri, BodyFromJson(data["incircle"]), tol) &&
         LooselyIncludes(tri, BodyFromJson(data["inner"]), tol);
    os << " incircle_margin=" << FormatDouble(m);
  } else if (name == "comet-unit-disk") {
    const Comet c = Comet::Build(PointFromJson(data["focus"]), BodyFromJson(data["nucleus"]), tol);
    const auto [e0, e1] = c.front_arc_ends();
    const double y = 2 * std::sqrt(2.0) / 3;
    ok = std::abs(e0.x - 1.0 / 3) < 1e-12 && std::abs(e1.x - 1.0 / 3) < 1e-12 &&
         std::abs(std::abs(e0.y) - y) < 1e-12 && std::abs(std::abs(e1.y) - y) < 1e-12 &&
         e0.y * e1.y < 0;
    os << " ends=(" << FormatDouble(e0.x) << ',' << FormatDouble(e0.y) << ")("
       << FormatDouble(e1.x) << ',' << FormatDouble(e1.y) << ')';
  }
  r.verdict = ok ? Verdict::kPass : Verdict::kFail;
  r.detail = os.str();
  return r;
}

}  // namespace carousel
