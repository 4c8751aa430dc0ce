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

#include "carousel/rng.hpp"
#include "carousel/transforms.hpp"

namespace carousel {
namespace {

using Q = Rational;

PointQ P(long x, long y) { return {Q(x), Q(y)}; }

MapQ RandomMap(SplitMix64& rng) {
  if (rng.below(4) == 0) {
    return MapQ::Translation({rng.rational(-10, 10, 7), rng.rational(-10, 10, 11)});
  }
  Q ratio = rng.rational(0, 5, 13);
  if (ratio == 0) ratio = Q(1, 13);
  return MapQ::Homothety({rng.rational(-10, 10, 3), rng.rational(-10, 10, 5)}, ratio);
}

PointQ RandomPointQ(SplitMix64& rng) { return {rng.rational(-20, 20, 17), rng.rational(-20, 20, 19)}; }

Q NonzeroRatio(SplitMix64& rng) {
  Q v = rng.rational(-10, 10, 29);
  return v == 0 ? Q(1, 29) : v;
}

TEST(Apply, Examples) {
  EXPECT_EQ(MapQ::Homothety(P(0, 0), Q(1, 2))(P(1, 0)), (PointQ{Q(1, 2), Q(0)}));
  const MapQ one = MapQ::Homothety(P(7, -3), Q(1));
  EXPECT_EQ(one(P(5, 9)), P(5, 9));
  EXPECT_TRUE(one.is_identity());
  EXPECT_EQ(MapQ::Homothety(P(4, 2), Q(1, 2))(P(-2, 0)), P(1, 1));
}

TEST(Apply, DoubleTrackMatchesFormula) {
  const Map h = Map::Homothety({4, 2}, 0.5);
  EXPECT_EQ(h(Point{2, 2}), (Point{3, 2}));
  EXPECT_TRUE(Map::Homothety({1, 1}, 1.0).is_identity());
}

TEST(Compose, Examples) {
  const MapQ a = Compose(MapQ::Homothety(P(0, 0), Q(2)), MapQ::Homothety(P(0, 0), Q(1, 2)));
  EXPECT_TRUE(a.is_identity());
  const MapQ b = Compose(MapQ::Translation(P(1, 0)), MapQ::Translation(P(0, 1)));
  EXPECT_EQ(b, MapQ::Translation(P(1, 1)));
  // Evaluate the composite at two points: ratio 1 with a constant offset.
  const MapQ c = Compose(MapQ::Homothety(P(0, 0), Q(2)), MapQ::Homothety(P(1, 0), Q(1, 2)));
  EXPECT_EQ(c(P(0, 0)), P(1, 0));
  EXPECT_EQ(c(P(2, 2)), P(3, 2));
  EXPECT_TRUE(c.is_translation());
  EXPECT_EQ(c, MapQ::Translation(P(1, 0)));
}

TEST(Inverse, Examples) {
  EXPECT_EQ(Inverse(MapQ::Homothety(P(3, 1), Q(4))), MapQ::Homothety(P(3, 1), Q(1, 4)));
  EXPECT_EQ(Inverse(MapQ::Translation(P(2, -5))), MapQ::Translation(P(-2, 5)));
  EXPECT_TRUE(Inverse(MapQ::Identity()).is_identity());
}

TEST(PlaneMap, RejectsNonPositiveRatio) {
  EXPECT_THROW(MapQ::Homothety(P(0, 0), Q(0)), Error);
  EXPECT_THROW(MapQ::Homothety(P(0, 0), Q(-2)), Error);
  try {
    Map::Homothety({0, 0}, -1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerateRatio);
  }
}

TEST(PlaneMap, CenterRecovered) {
  const MapQ h = MapQ::Homothety(P(3, -2), Q(5, 7));
  ASSERT_TRUE(h.center().has_value());
  EXPECT_EQ(*h.center(), P(3, -2));
  EXPECT_FALSE(MapQ::Translation(P(1, 1)).center().has_value());
}

TEST(ConjugateHomothety, Examples) {
  EXPECT_EQ(ConjugateHomothety(MapQ::Translation(P(1, 0)), P(0, 0), Q(2)),
            ScaleMap<Q>::Homothety(P(1, 0), Q(2)));
  EXPECT_EQ(ConjugateHomothety(MapQ::Identity(), P(5, 5), Q(3)),
            ScaleMap<Q>::Homothety(P(5, 5), Q(3)));
  const MapQ phi = MapQ::Homothety(P(0, 0), Q(2));
  const ScaleMap<Q> h = ConjugateHomothety(phi, P(1, 1), Q(1, 2));
  EXPECT_EQ(h, ScaleMap<Q>::Homothety(P(2, 2), Q(1, 2)));
  // Both sides of phi o H(p0, xi) = H(phi(p0), xi) o phi at two points.
  const ScaleMap<Q> inner = ScaleMap<Q>::Homothety(P(1, 1), Q(1, 2));
  for (const PointQ& x : {P(0, 0), P(4, 0)}) EXPECT_EQ(phi(inner(x)), h(phi(x)));
  EXPECT_THROW(ConjugateHomothety(phi, P(1, 1), Q(0)), Error);
}

TEST(ConjugateHomothety, NegativeRatioAccepted) {
  const MapQ phi = MapQ::Homothety(P(1, 2), Q(3));
  const ScaleMap<Q> h = ConjugateHomothety(phi, P(-1, 4), Q(-5, 2));
  const ScaleMap<Q> inner = ScaleMap<Q>::Homothety(P(-1, 4), Q(-5, 2));
  EXPECT_EQ(phi.scale_map().after(inner), h.after(phi.scale_map()));
}

TEST(SixPointIdentity, Examples) {
  SplitMix64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const PointQ e1 = RandomPointQ(rng), p0 = RandomPointQ(rng), x0 = RandomPointQ(rng);
    const Q lambda = NonzeroRatio(rng);
    const auto r1 = SixPointIdentity(e1, p0, x0, lambda, Q(1));
    EXPECT_TRUE(r1.verdict);
    EXPECT_EQ(r1.x1, x0);
    EXPECT_TRUE(SixPointIdentity(e1, p0, x0, Q(1), NonzeroRatio(rng)).verdict);
  }
  const auto r = SixPointIdentity(P(0, 0), P(2, 0), P(0, 3), Q(2), Q(3));
  // Formula chain evaluated by hand with H(c, k)(x) = c + k (x - c).
  EXPECT_EQ(r.p1, P(4, 0));
  EXPECT_EQ(r.x1, P(-4, 9));
  EXPECT_EQ(r.x2, (PointQ{Q(4) + Q(1, 3) * Q(-8), Q(3)}));
  EXPECT_EQ(r.x3, P(-8, 18));
  EXPECT_EQ(r.x4, (PointQ{Q(4) + Q(1, 3) * Q(-12), Q(6)}));
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(r.recovered, P(0, 3));
  EXPECT_THROW(SixPointIdentity(P(0, 0), P(1, 0), P(0, 1), Q(0), Q(1)), Error);
  EXPECT_THROW(SixPointIdentity(P(0, 0), P(1, 0), P(0, 1), Q(1), Q(0)), Error);
}

TEST(Properties, GroupClosure) {
  SplitMix64 rng(101);
  for (int i = 0; i < 10000; ++i) {
    const MapQ g1 = RandomMap(rng), g2 = RandomMap(rng);
    const MapQ g = Compose(g1, g2);
    ASSERT_GT(g.ratio(), 0);
    for (int k = 0; k < 3; ++k) {
      const PointQ x = RandomPointQ(rng);
      ASSERT_EQ(g(x), g1(g2(x)));
    }
    ASSERT_TRUE(Compose(g, Inverse(g)).is_identity());
  }
}

TEST(Properties, ConjugationIdentity) {
  SplitMix64 rng(202);
  for (int i = 0; i < 10000; ++i) {
    const MapQ phi = RandomMap(rng);
    const PointQ p0 = RandomPointQ(rng);
    const Q xi = NonzeroRatio(rng);
    const ScaleMap<Q> rhs = ConjugateHomothety(phi, p0, xi);
    const ScaleMap<Q> inner = ScaleMap<Q>::Homothety(p0, xi);
    for (int k = 0; k < 3; ++k) {
      const PointQ x = RandomPointQ(rng);
      ASSERT_EQ(phi(inner(x)), rhs(phi(x)));
    }
  }
}

TEST(Properties, SixPointIdentityRandom) {
  SplitMix64 rng(303);
  for (int i = 0; i < 10000; ++i) {
    const auto r = SixPointIdentity(RandomPointQ(rng), RandomPointQ(rng), RandomPointQ(rng),
                                    NonzeroRatio(rng), NonzeroRatio(rng));
    ASSERT_TRUE(r.verdict);
  }
}

TEST(Properties, DirectionPreservation) {
  SplitMix64 rng(404);
  for (int i = 0; i < 2000; ++i) {
    const MapQ m = RandomMap(rng);
    PointQ d = RandomPointQ(rng);
    if (d == P(0, 0)) continue;
    const LineQ l(RandomPointQ(rng), Direction<Q>(d));
    const LineQ img = m(l);
    ASSERT_TRUE(img.dir == l.dir);
    // The image line is the image of two points of l.
    ASSERT_EQ(Orient2d(img.anchor, img.second_point(), m(l.second_point())), 0);
  }
}

}  // namespace
}  // namespace carousel
