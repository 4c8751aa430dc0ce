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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "carousel/convex_geometry.hpp"
#include "carousel/lattice.hpp"
#include "carousel/rng.hpp"

namespace carousel {
namespace {

template <class F>
ErrorCode CodeOf(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kParseError;
}

bool Has(Mask x, int i) { return (x >> i) & 1U; }

// Exact orientation on doubles lifted to rationals.
int Orient(const Point& a, const Point& b, const Point& c) {
  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  return sgn((bx - ax) * (cy - ay) - (by - ay) * (cx - ax));
}

bool OnSegment(const Point& a, const Point& b, const Point& p) {
  return Orient(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Caratheodory: p is in conv(s) iff it is in a triangle, segment or point of s.
bool InHullOracle(const std::vector<Point>& s, const Point& p) {
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == p) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (OnSegment(s[i], s[j], p)) return true;
      for (std::size_t k = j + 1; k < n; ++k) {
        const int o1 = Orient(s[i], s[j], p), o2 = Orient(s[j], s[k], p),
                  o3 = Orient(s[k], s[i], p);
        if ((o1 >= 0 && o2 >= 0 && o3 >= 0) || (o1 <= 0 && o2 <= 0 && o3 <= 0)) {
          if (Orient(s[i], s[j], s[k]) != 0) return true;
        }
      }
    }
  }
  return false;
}

Mask PointClosureOracle(const std::vector<Point>& e, Mask x) {
  std::vector<Point> s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (Has(x, static_cast<int>(i))) s.push_back(e[i]);
  }
  Mask out = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (InHullOracle(s, e[i])) out |= Mask{1} << i;
  }
  return out;
}

// Support dominance on a direction grid: max over disks of c.u + r.
double DiskHullMarginOracle(const std::vector<Disk>& e, Mask x, const Disk& d, int dirs = 20000) {
  double worst = 1e300;
  for (int k = 0; k < dirs; ++k) {
    const Point u = UnitAt(kTwoPi * k / dirs);
    double h = -1e300;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (Has(x, static_cast<int>(i))) {
        h = std::max(h, e[i].center.x * u.x + e[i].center.y * u.y + e[i].radius);
      }
    }
    worst = std::min(worst, h - (d.center.x * u.x + d.center.y * u.y + d.radius));
  }
  return worst;
}

std::vector<Point> RandomGridPoints(SplitMix64& rng, int n, int side) {
  std::vector<Point> pts;
  while (static_cast<int>(pts.size()) < n) {
    const Point p{static_cast<double>(rng.between(0, side)),
                  static_cast<double>(rng.between(0, side))};
    if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
  }
  return pts;
}

std::vector<Disk> RandomDisks(SplitMix64& rng, int n) {
  std::vector<Disk> out;
  for (int i = 0; i < n; ++i) {
    out.push_back({rng.point_in_box(0, 10), rng.uniform(0.2, 2.0)});
  }
  return out;
}

// Cgeo of a finite lattice: join-irreducibles of the dual, closed under
// y <= join of X in the dual.
struct Cgeo {
  std::vector<int> elements;
  ClosureSystem closure;
};

Cgeo MakeCgeo(const FiniteLattice& l) {
  auto dual = std::make_shared<FiniteLattice>(l.dual());
  std::vector<int> j = JoinIrreducibles(*dual);
  ClosureSystem cs(static_cast<int>(j.size()), [dual, j](Mask x, bool&) {
    int top = dual->bottom();
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (Has(x, static_cast<int>(i))) top = dual->join(top, j[i]);
    }
    Mask out = 0;
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (dual->leq(j[i], top)) out |= Mask{1} << i;
    }
    return out;
  });
  return {std::move(j), std::move(cs)};
}

// Checks Cgeo(Lat(cs)) is isomorphic to cs through e -> cl({e}).
void ExpectCgeoRoundTrip(const ClosureSystem& cs) {
  const ClosedSetLattice lat = MakeClosedSetLattice(cs);
  const Cgeo g = MakeCgeo(lat.lattice);
  ASSERT_EQ(static_cast<int>(g.elements.size()), cs.size());
  std::vector<int> image(cs.size());
  for (int e = 0; e < cs.size(); ++e) {
    const Mask ce = cs(Mask{1} << e);
    const auto it = std::find(lat.sets.begin(), lat.sets.end(), ce);
    ASSERT_NE(it, lat.sets.end());
    const int elem = static_cast<int>(it - lat.sets.begin());
    const auto pos = std::find(g.elements.begin(), g.elements.end(), elem);
    ASSERT_NE(pos, g.elements.end()) << "cl({e}) is not join-irreducible";
    image[e] = static_cast<int>(pos - g.elements.begin());
  }
  auto map = [&](Mask x) {
    Mask out = 0;
    for (int e = 0; e < cs.size(); ++e) {
      if (Has(x, e)) out |= Mask{1} << image[e];
    }
    return out;
  };
  for (Mask x = 0; x <= cs.full(); ++x) {
    ASSERT_EQ(map(cs(x)), g.closure(map(x))) << "mask " << x;
  }
  // Lat(Cgeo(L)) has as many elements as L.
  EXPECT_EQ(MakeClosedSetLattice(g.closure).lattice.size(), lat.lattice.size());
}

TEST(PointClosure, Examples) {
  const ClosureSystem cs = PointClosure({{0, 0}, {2, 0}, {1, 0}});
  EXPECT_EQ(cs(0b011), 0b111u);
  EXPECT_EQ(cs(0), 0u);
  const ClosureSystem sq = PointClosure({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  for (int i = 0; i < 4; ++i) {
    const Mask x = (Mask{1} << i) | (Mask{1} << ((i + 1) % 4));
    EXPECT_EQ(sq(x), x);
  }
  EXPECT_EQ(sq(0b0101), 0b0101u);
  EXPECT_EQ(sq(0b0111), 0b0111u);
}

TEST(PointClosure, CollinearTripleHasSevenClosedSets) {
  const std::vector<Point> e{{0, 0}, {1, 0}, {2, 0}};
  const ClosureSystem cs = PointClosure(e);
  std::vector<Mask> brute;
  for (Mask x = 0; x < 8; ++x) {
    if (PointClosureOracle(e, x) == x) brute.push_back(x);
  }
  EXPECT_EQ(cs.closed_sets(), brute);
  EXPECT_EQ(brute.size(), 7u);  // everything but the two endpoints
  EXPECT_FALSE(cs.is_closed(0b101));
}

TEST(PointClosure, MatchesHullOracle) {
  for (int trial = 0; trial < 200; ++trial) {
    SplitMix64 rng = TrialRng(11, trial);
    const auto e = RandomGridPoints(rng, static_cast<int>(rng.between(1, 7)), 4);
    const ClosureSystem cs = PointClosure(e);
    for (Mask x = 0; x <= cs.full(); ++x) {
      ASSERT_EQ(cs(x), PointClosureOracle(e, x)) << "trial " << trial << " mask " << x;
    }
  }
}

TEST(CircleClosure, StadiumAbsorbsMiddleDisk) {
  const std::vector<Disk> e{{{0, 0}, 1}, {{4, 0}, 1}, {{2, 0}, 0.5}};
  ASSERT_GT(DiskHullMarginOracle(e, 0b011, e[2]), 0.0);
  const ClosureSystem cs = CircleClosure(e);
  EXPECT_EQ(cs(0b011), 0b111u);
  EXPECT_EQ(cs(0b001), 0b001u);
  EXPECT_EQ(cs(0b100), 0b100u);
  EXPECT_EQ(cs(0), 0u);
  EXPECT_FALSE(cs.indeterminate());
}

TEST(CircleClosure, MatchesSupportOracle) {
  int decided = 0;
  for (int trial = 0; trial < 60; ++trial) {
    SplitMix64 rng = TrialRng(12, trial);
    const auto e = RandomDisks(rng, static_cast<int>(rng.between(2, 5)));
    const ClosureSystem cs = CircleClosure(e);
    for (Mask x = 1; x <= cs.full(); ++x) {
      const Mask got = cs(x);
      for (int i = 0; i < cs.size(); ++i) {
        if (Has(x, i)) continue;
        const double m = DiskHullMarginOracle(e, x, e[i], 4000);
        // The grid overestimates the margin by at most r (1 - cos(pi/4000)).
        if (std::abs(m) < 1e-5) continue;
        ++decided;
        ASSERT_EQ(Has(got, i), m > 0) << "trial " << trial << " mask " << x << " disk " << i;
      }
    }
  }
  EXPECT_GT(decided, 500);
}

ClosureSystem CorruptedTable() {
  // cl({a}) = {a,b} but cl({a,b}) = {a,b,c}: only idempotence breaks.
  std::vector<Mask> t(8);
  for (Mask x = 0; x < 8; ++x) t[x] = x;
  t[0b001] = 0b011;
  t[0b011] = 0b111;
  t[0b101] = 0b111;
  return ClosureSystem::FromTable(3, t);
}

TEST(ClosureAxioms, HoldForGeometricSystems) {
  SplitMix64 rng(13);
  const ClosureSystem pts = PointClosure(RandomGridPoints(rng, 5, 20));
  const AxiomReport a = VerifyClosureAxioms(pts);
  EXPECT_TRUE(a.ok);
  EXPECT_TRUE(a.empty_closed);

  // Four pairwise disjoint disks.
  std::vector<Disk> disks;
  while (disks.size() < 4) {
    const Disk d{rng.point_in_box(0, 10), rng.uniform(0.3, 1.5)};
    bool clear = true;
    for (const auto& o : disks) {
      clear = clear && Dist(o.center, d.center) > o.radius + d.radius;
    }
    if (clear) disks.push_back(d);
  }
  EXPECT_TRUE(VerifyClosureAxioms(CircleClosure(disks)).ok);
}

TEST(ClosureAxioms, CorruptedTableReportsIdempotence) {
  const AxiomReport r = VerifyClosureAxioms(CorruptedTable());
  ASSERT_FALSE(r.ok);
  ASSERT_TRUE(r.violation.has_value());
  EXPECT_EQ(r.violation->axiom, Axiom::kIdempotent);
  EXPECT_EQ(r.violation->x, 0b001u);
  EXPECT_EQ(ToString(r.violation->axiom), "idempotent");
}

TEST(ClosureAxioms, OtherInjectedFaults) {
  std::vector<Mask> t{0b00, 0b01, 0b00, 0b11};  // cl({b}) loses b
  AxiomReport r = VerifyClosureAxioms(ClosureSystem::FromTable(2, t));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violation->axiom, Axiom::kExtensive);
  EXPECT_EQ(r.violation->x, 0b10u);

  t = {0b01, 0b01, 0b10, 0b11};  // cl(empty) = {a} but cl({b}) = {b}
  r = VerifyClosureAxioms(ClosureSystem::FromTable(2, t));
  ASSERT_FALSE(r.ok);
  EXPECT_FALSE(r.empty_closed);
  EXPECT_EQ(r.violation->axiom, Axiom::kMonotone);
  EXPECT_EQ(r.violation->x, 0b00u);
  EXPECT_EQ(r.violation->y, 0b10u);
}

TEST(ClosureSystem, SizeLimits) {
  EXPECT_EQ(CodeOf([] { ClosureSystem(21, [](Mask x, bool&) { return x; }); }),
            ErrorCode::kSizeLimit);
  EXPECT_EQ(CodeOf([] { ClosureSystem::FromTable(2, {0, 1, 2}); }),
            ErrorCode::kPreconditionViolated);
  const ClosureSystem big(17, [](Mask x, bool&) { return x; });
  EXPECT_EQ(CodeOf([&] { MakeClosedSetLattice(big); }), ErrorCode::kSizeLimit);
}

TEST(AntiExchange, RandomPointConfigurations) {
  for (int trial = 0; trial < 1000; ++trial) {
    SplitMix64 rng = TrialRng(14, trial);
    const ClosureSystem cs = PointClosure(RandomGridPoints(rng, static_cast<int>(rng.between(1, 8)), 5));
    ASSERT_TRUE(VerifyClosureAxioms(cs).ok) << trial;
    ASSERT_TRUE(VerifyAntiExchange(cs).ok) << trial;
    ASSERT_TRUE(IsConvexGeometry(cs));
  }
}

TEST(AntiExchange, RandomCircleConfigurations) {
  int decided = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    SplitMix64 rng = TrialRng(15, trial);
    const ClosureSystem cs = CircleClosure(RandomDisks(rng, static_cast<int>(rng.between(1, 6))));
    const bool axioms = VerifyClosureAxioms(cs).ok;
    const bool anti = VerifyAntiExchange(cs).ok;
    if (cs.indeterminate()) continue;
    ++decided;
    ASSERT_TRUE(axioms) << trial;
    ASSERT_TRUE(anti) << trial;
  }
  EXPECT_GT(decided, 950);
}

TEST(AntiExchange, TriangleFixtureBreaksIt) {
  const TriangleNonExample fx = TriangleNonExampleFixture();
  const ClosureSystem cs = TriangleClosure(fx.shapes);
  EXPECT_TRUE(VerifyClosureAxioms(cs).ok);
  const AntiExchangeReport r = VerifyAntiExchange(cs);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violation->p, fx.violation.p);
  EXPECT_EQ(r.violation->q, fx.violation.q);
  EXPECT_EQ(r.violation->x, fx.violation.x);
  EXPECT_FALSE(IsConvexGeometry(cs));

  // Independent check of the witness with exact hull membership.
  auto inside = [&](int t, Mask x) {
    std::vector<Point> s;
    for (std::size_t i = 0; i < fx.shapes.size(); ++i) {
      if (Has(x, static_cast<int>(i))) s.insert(s.end(), fx.shapes[i].begin(), fx.shapes[i].end());
    }
    return std::all_of(fx.shapes[t].begin(), fx.shapes[t].end(),
                       [&](const Point& v) { return InHullOracle(s, v); });
  };
  const auto& v = fx.violation;
  EXPECT_TRUE(inside(v.p, v.x | (Mask{1} << v.q)));
  EXPECT_TRUE(inside(v.q, v.x | (Mask{1} << v.p)));
  EXPECT_FALSE(inside(v.p, v.x));
  EXPECT_FALSE(inside(v.q, v.x));
}

TEST(AntiExchange, SearchReproducesFixture) {
  const TriangleNonExample found = SearchTriangleNonExample(1, 200000, 3);
  const TriangleNonExample fx = TriangleNonExampleFixture();
  ASSERT_EQ(found.shapes.size(), fx.shapes.size());
  for (std::size_t i = 0; i < fx.shapes.size(); ++i) {
    for (int k = 0; k < 3; ++k) {
      EXPECT_EQ(found.shapes[i][k], fx.shapes[i][k]);
    }
  }
  EXPECT_EQ(found.violation.x, fx.violation.x);
}

TEST(AntiExchange, SearchGivesUp) {
  EXPECT_EQ(CodeOf([] { SearchTriangleNonExample(1, 0); }), ErrorCode::kGenerationFailed);
}

TEST(AntiExchange, EqualShapesAreExcluded) {
  // Two copies of one triangle break anti-exchange trivially with X empty.
  const TriangleShape t = EquilateralTriangle({0, 0}, 1, 0);
  const AntiExchangeReport r = VerifyAntiExchange(TriangleClosure({t, t}));
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violation->x, 0u);
}

TEST(Lattice, SmallFixtures) {
  const FiniteLattice m3 = M3Lattice();
  EXPECT_TRUE(IsSemimodular(m3));
  EXPECT_FALSE(IsDistributiveInterval(m3, m3.bottom(), m3.top()));
  EXPECT_FALSE(IsJoinDistributive(m3));

  const FiniteLattice n5 = N5Lattice();
  EXPECT_FALSE(IsSemimodular(n5));
  EXPECT_FALSE(IsJoinDistributive(n5));
  EXPECT_EQ(n5.join(1, 3), 4);
  EXPECT_EQ(n5.meet(2, 3), 0);

  EXPECT_TRUE(IsJoinDistributive(ChainLattice(2)));
  EXPECT_TRUE(IsJoinDistributive(ChainLattice(6)));
  EXPECT_TRUE(IsJoinDistributive(BooleanLattice(3)));
}

// Distributive law on all triples of [lo, hi].
bool DistributiveByLaw(const FiniteLattice& l, int lo, int hi) {
  std::vector<int> s;
  for (int c = 0; c < l.size(); ++c) {
    if (l.leq(lo, c) && l.leq(c, hi)) s.push_back(c);
  }
  for (int a : s) {
    for (int b : s) {
      for (int c : s) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) return false;
      }
    }
  }
  return true;
}

TEST(Lattice, DistributiveIntervalsMatchTheLaw) {
  // Lattices of random Moore families on four elements.
  SplitMix64 rng(8);
  int distributive = 0, not_distributive = 0;
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<Mask> family{0b1111};
    for (Mask m = 0; m < 15; ++m) {
      if (rng.below(3) == 0) family.push_back(m);
    }
    std::vector<Mask> t(16);
    for (Mask x = 0; x < 16; ++x) {
      t[x] = 0b1111;
      for (Mask f : family) {
        if ((x & f) == x) t[x] &= f;
      }
    }
    const FiniteLattice l = MakeClosedSetLattice(ClosureSystem::FromTable(4, t)).lattice;
    for (int lo = 0; lo < l.size(); ++lo) {
      for (int hi = 0; hi < l.size(); ++hi) {
        if (!l.leq(lo, hi)) continue;
        const bool want = DistributiveByLaw(l, lo, hi);
        ASSERT_EQ(IsDistributiveInterval(l, lo, hi), want) << trial << " " << lo << " " << hi;
        (want ? distributive : not_distributive)++;
      }
    }
  }
  EXPECT_GT(not_distributive, 100);
  EXPECT_GT(distributive, 100);
  const FiniteLattice n5 = N5Lattice();
  EXPECT_FALSE(IsDistributiveInterval(n5, n5.bottom(), n5.top()));
  EXPECT_TRUE(IsDistributiveInterval(BooleanLattice(5), 0, BooleanLattice(5).top()));
}

TEST(Lattice, BooleanJoinMeetAreOrAnd) {
  const FiniteLattice b = BooleanLattice(4);
  for (int x = 0; x < 16; ++x) {
    for (int y = 0; y < 16; ++y) {
      ASSERT_EQ(b.join(x, y), x | y);
      ASSERT_EQ(b.meet(x, y), x & y);
    }
  }
  EXPECT_EQ(b.bottom(), 0);
  EXPECT_EQ(b.top(), 15);
  EXPECT_EQ(b.upper_covers(0).size(), 4u);
}

TEST(Lattice, JoinIrreducibles) {
  EXPECT_EQ(JoinIrreducibles(ChainLattice(3)), (std::vector<int>{1, 2}));
  EXPECT_EQ(JoinIrreducibles(BooleanLattice(2)), (std::vector<int>{1, 2}));
  EXPECT_EQ(JoinIrreducibles(M3Lattice()), (std::vector<int>{1, 2, 3}));
}

TEST(Lattice, RejectsNonLattices) {
  // Two maximal elements.
  EXPECT_EQ(CodeOf([] { FiniteLattice(3, [](int a, int b) { return a == b || a == 0; }); }),
            ErrorCode::kPreconditionViolated);
  // Not antisymmetric.
  EXPECT_EQ(CodeOf([] { FiniteLattice(2, [](int, int) { return true; }); }),
            ErrorCode::kPreconditionViolated);
  // Not transitive.
  EXPECT_EQ(CodeOf([] {
              FiniteLattice(3, [](int a, int b) { return a == b || b == a + 1; });
            }),
            ErrorCode::kPreconditionViolated);
  // 0 < a, b < c, d < 1: a and b have two minimal upper bounds.
  static const bool kLeq[6][6] = {{1, 1, 1, 1, 1, 1}, {0, 1, 0, 1, 1, 1}, {0, 0, 1, 1, 1, 1},
                                  {0, 0, 0, 1, 0, 1}, {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 0, 1}};
  EXPECT_EQ(CodeOf([] { FiniteLattice(6, [](int a, int b) { return kLeq[a][b]; }); }),
            ErrorCode::kPreconditionViolated);
  EXPECT_EQ(CodeOf([] { ChainLattice(kMaxLatticeSize + 1); }), ErrorCode::kSizeLimit);
}

TEST(Lattice, AdjacencyText) {
  EXPECT_EQ(ToAdjacencyText(ChainLattice(2)), "0: 1\n1:\n");
  EXPECT_EQ(ToAdjacencyText(M3Lattice()), "0: a b c\na: 1\nb: 1\nc: 1\n1:\n");
}

TEST(ClosedSetLattice, OnePointIsTwoChain) {
  const ClosedSetLattice l = MakeClosedSetLattice(PointClosure({{5, 5}}));
  EXPECT_EQ(l.lattice.size(), 2);
  // Reverse inclusion: the full set is the bottom.
  EXPECT_EQ(l.sets[l.lattice.bottom()], 1u);
  EXPECT_EQ(l.sets[l.lattice.top()], 0u);
  EXPECT_TRUE(IsJoinDistributive(l.lattice));
}

TEST(ClosedSetLattice, CollinearTriple) {
  const ClosureSystem cs = PointClosure({{0, 0}, {1, 0}, {2, 0}});
  const ClosedSetLattice l = MakeClosedSetLattice(cs);
  ASSERT_EQ(l.lattice.size(), 7);
  EXPECT_TRUE(IsJoinDistributive(l.lattice));

  // Brute force: X has exactly one closed proper superset with nothing
  // closed in between.
  std::vector<int> brute;
  for (std::size_t i = 0; i < l.sets.size(); ++i) {
    int covers = 0;
    for (std::size_t j = 0; j < l.sets.size(); ++j) {
      const Mask a = l.sets[i], b = l.sets[j];
      if (a == b || (a & b) != a) continue;
      bool between = false;
      for (Mask c : l.sets) {
        between = between || (c != a && c != b && (a & c) == a && (c & b) == c);
      }
      covers += between ? 0 : 1;
    }
    if (covers == 1) brute.push_back(static_cast<int>(i));
  }
  EXPECT_EQ(JoinIrreducibles(l.lattice), brute);
  // {b} is not one since both {a,b} and {b,c} sit right above it.
  std::vector<Mask> jsets;
  for (int j : brute) jsets.push_back(l.sets[j]);
  EXPECT_EQ(jsets, (std::vector<Mask>{0b001, 0b011, 0b100, 0b110}));
}

TEST(ClosedSetLattice, DualityOfOperations) {
  for (int trial = 0; trial < 40; ++trial) {
    SplitMix64 rng = TrialRng(16, trial);
    const ClosureSystem cs = PointClosure(RandomGridPoints(rng, static_cast<int>(rng.between(2, 7)), 4));
    const ClosedSetLattice l = MakeClosedSetLattice(cs);
    for (int a = 0; a < l.lattice.size(); ++a) {
      for (int b = 0; b < l.lattice.size(); ++b) {
        ASSERT_EQ(l.sets[l.lattice.meet(a, b)], cs(l.sets[a] | l.sets[b]));
        ASSERT_EQ(l.sets[l.lattice.join(a, b)], l.sets[a] & l.sets[b]);
      }
    }
    const FiniteLattice d = l.lattice.dual();
    EXPECT_EQ(d.bottom(), l.lattice.top());
    EXPECT_EQ(d.top(), l.lattice.bottom());
  }
}

TEST(ClosedSetLattice, CircleRoundTrip) {
  int decided = 0;
  for (int trial = 0; trial < 300; ++trial) {
    SplitMix64 rng = TrialRng(17, trial);
    const ClosureSystem cs = CircleClosure(RandomDisks(rng, static_cast<int>(rng.between(1, 5))));
    cs.closed_sets();
    if (cs.indeterminate()) continue;
    ++decided;
    const ClosedSetLattice l = MakeClosedSetLattice(cs);
    ASSERT_TRUE(IsJoinDistributive(l.lattice)) << trial;
    ExpectCgeoRoundTrip(cs);
  }
  EXPECT_GT(decided, 280);
}

TEST(ClosedSetLattice, PointRoundTrip) {
  for (int trial = 0; trial < 100; ++trial) {
    SplitMix64 rng = TrialRng(18, trial);
    const ClosureSystem cs = PointClosure(RandomGridPoints(rng, static_cast<int>(rng.between(1, 7)), 4));
    ASSERT_TRUE(IsJoinDistributive(MakeClosedSetLattice(cs).lattice)) << trial;
    ExpectCgeoRoundTrip(cs);
  }
}

TEST(ClosedSetLattice, TriangleFixtureLatticeIsNotJoinDistributive) {
  const ClosureSystem cs = TriangleClosure(TriangleNonExampleFixture().shapes);
  EXPECT_FALSE(IsJoinDistributive(MakeClosedSetLattice(cs).lattice));
}

}  // namespace
}  // namespace carousel
