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

#include <benchmark/benchmark.h>

#include <algorithm>

#include "carousel/convex_geometry.hpp"
#include "carousel/harness.hpp"
#include "carousel/lattice.hpp"

namespace carousel {
namespace {

void BM_WitnessSearch(benchmark::State& state) {
  std::vector<TheoremInstance> inst;
  for (int i = 0; i < 64; ++i) inst.push_back(GenerateTheoremInstance(7, static_cast<std::uint64_t>(i)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& t = inst[i++ % inst.size()];
    benchmark::DoNotOptimize(WitnessSearch(t.u0, t.u1, t.tri));
  }
}
BENCHMARK(BM_WitnessSearch);

void BM_MaxShrink(benchmark::State& state) {
  const TheoremInstance t = GenerateTheoremInstance(7, 3);
  const Triangle tri(t.tri[0], t.tri[1], t.tri[2]);
  const Point p0 = t.u0.inner_point();
  for (auto _ : state) benchmark::DoNotOptimize(MaxShrinkParameter(t.u0, t.u1, tri, p0, t.m));
}
BENCHMARK(BM_MaxShrink);

void BM_EdgeFreeApprox(benchmark::State& state) {
  const ConvexBody sq = ConvexBody::MakePolygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const ConvexBody u = EdgeFreeApprox(sq, n);
    benchmark::DoNotOptimize(Abundance(sq, u));
  }
}
BENCHMARK(BM_EdgeFreeApprox)->Arg(10)->Arg(50)->Arg(200);

void BM_LineBoundary(benchmark::State& state) {
  const ConvexBody u =
      ConvexBody::MakeDiskIntersection({{{0, 0}, 2}, {{1, 0}, 2}, {{0.5, 1}, 1.5}});
  SplitMix64 rng(3);
  for (auto _ : state) {
    const Line l(rng.point_in_box(-2, 2), Direction<double>(UnitAt(rng.uniform(0, kTwoPi))));
    benchmark::DoNotOptimize(LineBoundaryIntersections(u, l));
  }
}
BENCHMARK(BM_LineBoundary);

void BM_PointClosureLattice(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  SplitMix64 rng(11);
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point p{static_cast<double>(rng.between(0, 9)), static_cast<double>(rng.between(0, 9))};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  const ClosureSystem cs = PointClosure(pts);
  for (auto _ : state) {
    const auto lat = MakeClosedSetLattice(cs);
    benchmark::DoNotOptimize(IsJoinDistributive(lat.lattice));
  }
}
BENCHMARK(BM_PointClosureLattice)->Arg(4)->Arg(6)->Arg(8);

void BM_CircleClosureAxioms(benchmark::State& state) {
  SplitMix64 rng(12);
  std::vector<Disk> disks;
  for (int i = 0; i < state.range(0); ++i) disks.push_back({rng.point_in_box(0, 10), rng.uniform(0.2, 2)});
  for (auto _ : state) {
    const ClosureSystem cs = CircleClosure(disks);
    benchmark::DoNotOptimize(VerifyAntiExchange(cs));
  }
}
BENCHMARK(BM_CircleClosureAxioms)->Arg(4)->Arg(6);

}  // namespace
}  // namespace carousel

BENCHMARK_MAIN();
