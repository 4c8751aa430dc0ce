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

#include <cmath>

#include "carousel/geom.hpp"
#include "carousel/rng.hpp"

namespace carousel {
namespace {

TEST(Orient2d, UnitTurns) {
  EXPECT_EQ(Orient2d(Point{0, 0}, Point{1, 0}, Point{0, 1}), 1);
  EXPECT_EQ(Orient2d(Point{0, 0}, Point{1, 1}, Point{2, 2}), 0);
  EXPECT_EQ(Orient2d(Point{0, 0}, Point{1, 0}, Point{0, -1}), -1);
}

TEST(Orient2d, RationalAndDoubleAgree) {
  const PointQ a{Rational(1, 3), Rational(2, 7)};
  const PointQ b{Rational(5, 3), Rational(-1, 7)};
  // c on the line a b: a + 3 (b - a)
  const PointQ c = a + Rational(3) * (b - a);
  EXPECT_EQ(Orient2d(a, b, c), 0);
  // On doubles the same points are rounded and need not stay collinear, but
  // the sign must match the exact value of the rounded inputs.
  const Point ad = ToDouble(a), bd = ToDouble(b), cd = ToDouble(c);
  EXPECT_EQ(Orient2d(ad, bd, cd), Orient2d(ToRational(ad), ToRational(bd), ToRational(cd)));
}

TEST(Orient2d, NearlyCollinearDoublesAreExact) {
  // Classic filter stress: points on y = x shifted by a few ulps.
  SplitMix64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const double t = rng.uniform(0.5, 2.0);
    const Point a{0.5, 0.5};
    const Point b{12.0, 12.0};
    const Point c{t + std::ldexp(static_cast<double>(rng.between(-4, 4)), -52), t};
    EXPECT_EQ(Orient2d(a, b, c), Orient2d(ToRational(a), ToRational(b), ToRational(c)));
  }
}

TEST(Orient2d, AntisymmetricOnRationalGrid) {
  std::vector<PointQ> grid;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) grid.push_back({Rational(i, 2), Rational(j - 2, 3)});
  }
  for (const auto& a : grid) {
    for (const auto& b : grid) {
      for (const auto& c : grid) {
        const int o = Orient2d(a, b, c);
        ASSERT_EQ(Orient2d(b, a, c), -o);
        ASSERT_EQ(Orient2d(a, c, b), -o);
        ASSERT_EQ(Orient2d(c, b, a), -o);
      }
    }
  }
}

TEST(SideOfLine, Examples) {
  const Line x_axis({0, 0}, Direction<double>(1, 0));
  EXPECT_EQ(SideOfLine(x_axis, Point{0, 1}), Side::kLeft);
  EXPECT_EQ(SideOfLine(x_axis, Point{5, 0}), Side::kOn);
  const Line down({0, 0}, Direction<double>(0, -1));
  // Determinant of (0,-1) and (1,0) is 0*0 - (-1)*1 = 1 > 0.
  EXPECT_EQ(SideOfLine(down, Point{1, 0}), Side::kLeft);
}

TEST(SideOfLine, ToleranceBand) {
  const Line x_axis({0, 0}, Direction<double>(2, 0));
  EXPECT_EQ(SideOfLine(x_axis, Point{3, 5e-10}, Tolerance{1e-9}), Side::kOn);
  EXPECT_EQ(SideOfLine(x_axis, Point{3, 5e-10}, Tolerance::Exact()), Side::kLeft);
  EXPECT_EQ(SideOfLine(x_axis, Point{3, -2e-9}, Tolerance{1e-9}), Side::kRight);
}

TEST(SideOfLine, ReversalSwapsSides) {
  SplitMix64 rng(5);
  for (int i = 0; i < 10000; ++i) {
    const Point a = rng.point_in_box(-10, 10);
    Point d = rng.point_in_box(-1, 1);
    if (d == Point{0, 0}) continue;
    const Line l(a, Direction<double>(d));
    const Point p = rng.point_in_box(-10, 10);
    const Side s = SideOfLine(l, p, Tolerance::Exact());
    const Side r = SideOfLine(l.reversed(), p, Tolerance::Exact());
    if (s == Side::kRight) EXPECT_EQ(r, Side::kLeft);
    if (s == Side::kLeft) EXPECT_EQ(r, Side::kRight);
    if (s == Side::kOn) EXPECT_EQ(r, Side::kOn);
  }
}

TEST(SideOfLine, RationalTrack) {
  const LineQ l({Rational(0), Rational(0)}, Direction<Rational>(Rational(1), Rational(1)));
  EXPECT_EQ(SideOfLine(l, PointQ{Rational(1, 3), Rational(1, 3)}), Side::kOn);
  EXPECT_EQ(SideOfLine(l, PointQ{Rational(1, 3), Rational(1, 2)}), Side::kLeft);
}

TEST(Direction, PositiveProportionality) {
  EXPECT_EQ(Direction<double>(1, 2), Direction<double>(3, 6));
  EXPECT_FALSE(Direction<double>(1, 2) == Direction<double>(-1, -2));
  EXPECT_THROW(Direction<double>(0, 0), Error);
}

TEST(Dist, Examples) {
  EXPECT_DOUBLE_EQ(Dist(Point{0, 0}, Point{3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(Dist(Point{1, 1}, Point{1, 1}), 0.0);
  const double s3 = std::sqrt(3.0);
  // (6 - (-3))^2 + (0 - 3 sqrt3)^2 = 81 + 27 = 108.
  EXPECT_NEAR(Dist(Point{6, 0}, Point{-3, 3 * s3}), std::sqrt(108.0), 1e-12);
  EXPECT_NEAR(Dist(Point{6, 0}, Point{-3, 3 * s3}), 10.392304845413264, 1e-12);
}

// d(a,c) <= d(a,b) + d(b,c) decided without square roots.
bool TriangleInequalityExact(const PointQ& a, const PointQ& b, const PointQ& c) {
  const Rational ab = SquaredDistance(a, b), bc = SquaredDistance(b, c), ac = SquaredDistance(a, c);
  const Rational lhs = ac - ab - bc;
  if (lhs <= 0) return true;
  return lhs * lhs <= 4 * ab * bc;
}

TEST(Dist, TriangleInequalityOnRationals) {
  SplitMix64 rng(2026);
  for (int i = 0; i < 10000; ++i) {
    const PointQ a{rng.rational(-5, 5, 97), rng.rational(-5, 5, 89)};
    const PointQ b{rng.rational(-5, 5, 83), rng.rational(-5, 5, 79)};
    const PointQ c{rng.rational(-5, 5, 73), rng.rational(-5, 5, 71)};
    ASSERT_TRUE(TriangleInequalityExact(a, b, c));
    ASSERT_TRUE(TriangleInequalityExact(b, a, c));
    ASSERT_TRUE(TriangleInequalityExact(a, c, b));
  }
  // Degenerate: b on segment ac gives equality.
  const PointQ a{Rational(0), Rational(0)}, c{Rational(4), Rational(2)};
  const PointQ b{Rational(1), Rational(1, 2)};
  EXPECT_EQ(SquaredDistance(a, c), Rational(20));
  EXPECT_TRUE(TriangleInequalityExact(a, b, c));
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(ParseRational("3"), Rational(3));
  EXPECT_EQ(ParseRational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(ParseRational("0.125"), Rational(1, 8));
  EXPECT_EQ(ParseRational("-1.5"), Rational(-3, 2));
  EXPECT_THROW(ParseRational("abc"), Error);
  EXPECT_THROW(ParseRational(""), Error);
}

TEST(SplitMix64, ReferenceStream) {
  // First outputs for seed 1234567, as published with the reference
  // implementation.
  SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
}

}  // namespace
}  // namespace carousel
