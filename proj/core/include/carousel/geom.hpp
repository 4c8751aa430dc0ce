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

// Planar kernel shared by every other module.
//
// Two numeric tracks coexist. Vec2<Rational> is exact and is what the
// algebraic identities are checked on. Vec2<double> is the working track for
// curved bodies; its orientation predicate is still exact (a floating-point
// filter that falls back to rational arithmetic), so polygon predicates on
// doubles never misclassify.

#ifndef CAROUSEL_GEOM_HPP_
#define CAROUSEL_GEOM_HPP_

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <ostream>
#include <string>

#include "carousel/error.hpp"

namespace carousel {

using Rational = mpq_class;

/// Parses "p", "p/q" or a decimal literal into an exact rational.
Rational ParseRational(const std::string& text);
std::string ToString(const Rational& q);

inline double ToDouble(double v) { return v; }
inline double ToDouble(const Rational& v) { return v.get_d(); }

template <class T>
struct Vec2 {
  T x{};
  T y{};

  Vec2() = default;
  Vec2(T x_in, T y_in) : x(std::move(x_in)), y(std::move(y_in)) {}

  friend Vec2 operator+(const Vec2& a, const Vec2& b) {
    return {T(a.x + b.x), T(a.y + b.y)};
  }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) {
    return {T(a.x - b.x), T(a.y - b.y)};
  }
  friend Vec2 operator-(const Vec2& a) { return {T(-a.x), T(-a.y)}; }
  friend Vec2 operator*(const T& s, const Vec2& a) {
    return {T(s * a.x), T(s * a.y)};
  }
  friend Vec2 operator*(const Vec2& a, const T& s) { return s * a; }
  friend Vec2 operator/(const Vec2& a, const T& s) {
    return {T(a.x / s), T(a.y / s)};
  }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  friend bool operator==(const Vec2& a, const Vec2& b) {
    return a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
  // Lexicographic order; used for canonical tie-breaking.
  friend bool operator<(const Vec2& a, const Vec2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
  friend std::ostream& operator<<(std::ostream& os, const Vec2& p) {
    return os << '(' << p.x << ", " << p.y << ')';
  }
};

using Point = Vec2<double>;
using PointQ = Vec2<Rational>;

template <class T>
T Dot(const Vec2<T>& a, const Vec2<T>& b) {
  return T(a.x * b.x + a.y * b.y);
}
template <class T>
T Cross(const Vec2<T>& a, const Vec2<T>& b) {
  return T(a.x * b.y - a.y * b.x);
}
template <class T>
T SquaredNorm(const Vec2<T>& a) {
  return Dot(a, a);
}
template <class T>
T SquaredDistance(const Vec2<T>& a, const Vec2<T>& b) {
  return SquaredNorm(Vec2<T>(a - b));
}

inline double Norm(const Point& a) { return std::hypot(a.x, a.y); }
inline Point Normalized(const Point& a) { return a / Norm(a); }
inline Point UnitAt(double theta) { return {std::cos(theta), std::sin(theta)}; }
// Left and right perpendiculars.
template <class T>
Vec2<T> PerpLeft(const Vec2<T>& a) {
  return {T(-a.y), a.x};
}
template <class T>
Vec2<T> PerpRight(const Vec2<T>& a) {
  return {a.y, T(-a.x)};
}

inline Point ToDouble(const PointQ& p) { return {p.x.get_d(), p.y.get_d()}; }
// Every finite double is a dyadic rational, so this is exact.
inline PointQ ToRational(const Point& p) { return {Rational(p.x), Rational(p.y)}; }

/// Euclidean distance. Always floating; exact comparisons use
/// SquaredDistance instead.
template <class T>
double Dist(const Vec2<T>& p, const Vec2<T>& q) {
  const Vec2<T> d = p - q;
  return std::hypot(ToDouble(d.x), ToDouble(d.y));
}

/// Sign of the turn a -> b -> c: +1 left, 0 collinear, -1 right.
int Orient2d(const PointQ& a, const PointQ& b, const PointQ& c);
/// Exact on doubles: filtered evaluation with a rational fallback.
int Orient2d(const Point& a, const Point& b, const Point& c);

/// A ray direction. Stored unnormalized; two directions are equal when one
/// is a positive multiple of the other.
template <class T>
class Direction {
 public:
  Direction(T dx, T dy) : v_(std::move(dx), std::move(dy)) {
    if (v_.x == 0 && v_.y == 0) {
      throw Error(ErrorCode::kPreconditionViolated, "zero direction");
    }
  }
  explicit Direction(const Vec2<T>& v) : Direction(v.x, v.y) {}

  const Vec2<T>& vec() const { return v_; }
  const T& dx() const { return v_.x; }
  const T& dy() const { return v_.y; }
  Direction reversed() const { return Direction(-v_); }
  /// Outward normal of a supporting line with this direction (the body is on
  /// the left, so the outward side is the right).
  Vec2<T> outward_normal() const { return PerpRight(v_); }

  friend bool operator==(const Direction& a, const Direction& b) {
    return Cross(a.v_, b.v_) == 0 && Dot(a.v_, b.v_) > 0;
  }

 private:
  Vec2<T> v_;
};

/// Direction whose supporting lines have outward normal `n`.
template <class T>
Direction<T> DirectionFromOutwardNormal(const Vec2<T>& n) {
  return Direction<T>(PerpLeft(n));
}

template <class T>
struct DirectedLine {
  Vec2<T> anchor;
  Direction<T> dir;

  DirectedLine(Vec2<T> a, Direction<T> d) : anchor(std::move(a)), dir(std::move(d)) {}
  DirectedLine reversed() const { return {anchor, dir.reversed()}; }
  Vec2<T> second_point() const { return anchor + dir.vec(); }
};

using Line = DirectedLine<double>;
using LineQ = DirectedLine<Rational>;

/// Absolute slack for floating geometric tests. eps == 0 means "decide
/// exactly", which is only meaningful where the predicate itself is exact.
struct Tolerance {
  double eps = 1e-9;

  static Tolerance Default() { return {1e-9}; }
  static Tolerance Exact() { return {0.0}; }
};

enum class Side { kLeft, kOn, kRight };

std::string_view ToString(Side s);

template <class T>
Side SideOfLine(const DirectedLine<T>& l, const Vec2<T>& p, Tolerance tol = {}) {
  if constexpr (std::is_same_v<T, Rational>) {
    const int o = Orient2d(l.anchor, l.second_point(), p);
    return o > 0 ? Side::kLeft : (o < 0 ? Side::kRight : Side::kOn);
  } else {
    if (tol.eps == 0) {
      const int o = Orient2d(l.anchor, l.second_point(), p);
      return o > 0 ? Side::kLeft : (o < 0 ? Side::kRight : Side::kOn);
    }
    const double signed_dist = Cross(l.dir.vec(), p - l.anchor) / Norm(l.dir.vec());
    if (std::abs(signed_dist) <= tol.eps) return Side::kOn;
    return signed_dist > 0 ? Side::kLeft : Side::kRight;
  }
}

/// Signed distance of p from l; positive on the left.
inline double SignedDistance(const Line& l, const Point& p) {
  return Cross(l.dir.vec(), p - l.anchor) / Norm(l.dir.vec());
}

/// Closest point of segment [a, b] to p.
Point ClosestOnSegment(const Point& a, const Point& b, const Point& p);

}  // namespace carousel

#endif  // CAROUSEL_GEOM_HPP_
