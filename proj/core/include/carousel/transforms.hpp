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

// The group of positive homotheties and translations.
//
// Every map here has the form x -> a*x + b with a scalar a. Keeping that
// canonical (ratio, offset) pair as the representation makes map equality a
// field comparison, makes composition closed by construction, and lets a
// homothety of ratio 1 collapse to a translation automatically.

#ifndef CAROUSEL_TRANSFORMS_HPP_
#define CAROUSEL_TRANSFORMS_HPP_

#include <cmath>
#include <optional>

#include "carousel/geom.hpp"

namespace carousel {

/// x -> ratio * x + offset with ratio != 0. Negative ratios are allowed;
/// this is the setting of the conjugation and six-point identities.
template <class T>
class ScaleMap {
 public:
  ScaleMap(T ratio, Vec2<T> offset) : ratio_(std::move(ratio)), offset_(std::move(offset)) {
    if (ratio_ == 0) throw Error(ErrorCode::kDegenerateRatio, "ratio must be nonzero");
  }

  /// Homothety with the given center; any nonzero ratio.
  static ScaleMap Homothety(const Vec2<T>& center, const T& ratio) {
    if (ratio == 0) throw Error(ErrorCode::kDegenerateRatio, "homothety ratio 0");
    return ScaleMap(ratio, Vec2<T>(T(T(1) - ratio) * center));
  }
  static ScaleMap Translation(const Vec2<T>& v) { return ScaleMap(T(1), v); }
  static ScaleMap Identity() { return Translation({T(0), T(0)}); }

  const T& ratio() const { return ratio_; }
  const Vec2<T>& offset() const { return offset_; }
  bool is_translation() const { return ratio_ == 1; }
  bool is_identity() const { return ratio_ == 1 && offset_.x == 0 && offset_.y == 0; }
  /// Unique fixed point, absent for translations.
  std::optional<Vec2<T>> center() const {
    if (is_translation()) return std::nullopt;
    return offset_ / T(T(1) - ratio_);
  }

  Vec2<T> operator()(const Vec2<T>& x) const { return ratio_ * x + offset_; }

  /// (*this) o inner: apply inner first.
  ScaleMap after(const ScaleMap& inner) const {
    return ScaleMap(T(ratio_ * inner.ratio_), ratio_ * inner.offset_ + offset_);
  }
  ScaleMap inverse() const {
    const T inv = T(1) / ratio_;
    return ScaleMap(inv, Vec2<T>(T(-inv) * offset_));
  }

  friend bool operator==(const ScaleMap& a, const ScaleMap& b) {
    return a.ratio_ == b.ratio_ && a.offset_ == b.offset_;
  }

 private:
  T ratio_;
  Vec2<T> offset_;
};

/// Element of the positive homothety / translation group (ratio > 0).
template <class T>
class PlaneMap {
 public:
  static PlaneMap Homothety(const Vec2<T>& center, const T& ratio) {
    if (!(ratio > 0)) {
      throw Error(ErrorCode::kDegenerateRatio, "positive homothety needs ratio > 0");
    }
    return PlaneMap(ScaleMap<T>::Homothety(center, ratio));
  }
  static PlaneMap Translation(const Vec2<T>& v) {
    return PlaneMap(ScaleMap<T>::Translation(v));
  }
  static PlaneMap Identity() { return PlaneMap(ScaleMap<T>::Identity()); }
  /// Accepts a canonical (ratio, offset) pair; ratio must be positive.
  static PlaneMap FromScaleMap(const ScaleMap<T>& m) {
    if (!(m.ratio() > 0)) {
      throw Error(ErrorCode::kDegenerateRatio, "plane map needs ratio > 0");
    }
    return PlaneMap(m);
  }

  const T& ratio() const { return map_.ratio(); }
  const Vec2<T>& offset() const { return map_.offset(); }
  bool is_translation() const { return map_.is_translation(); }
  bool is_identity() const { return map_.is_identity(); }
  std::optional<Vec2<T>> center() const { return map_.center(); }
  /// Translation vector; only meaningful when is_translation().
  const Vec2<T>& translation_vector() const { return map_.offset(); }
  const ScaleMap<T>& scale_map() const { return map_; }

  Vec2<T> operator()(const Vec2<T>& x) const { return map_(x); }
  DirectedLine<T> operator()(const DirectedLine<T>& l) const {
    // Positive ratio: the image direction is a positive multiple.
    return {map_(l.anchor), Direction<T>(map_.ratio() * l.dir.vec())};
  }

  friend bool operator==(const PlaneMap& a, const PlaneMap& b) {
    return a.map_ == b.map_;
  }

 private:
  explicit PlaneMap(ScaleMap<T> m) : map_(std::move(m)) {}
  ScaleMap<T> map_;
};

using Map = PlaneMap<double>;
using MapQ = PlaneMap<Rational>;

template <class T>
Vec2<T> Apply(const PlaneMap<T>& m, const Vec2<T>& x) {
  return m(x);
}

/// g1 o g2 (g2 applied first). Closed in the group: ratios multiply, and a
/// product of ratio 1 is a translation.
template <class T>
PlaneMap<T> Compose(const PlaneMap<T>& g1, const PlaneMap<T>& g2) {
  return PlaneMap<T>::FromScaleMap(g1.scale_map().after(g2.scale_map()));
}

template <class T>
PlaneMap<T> Inverse(const PlaneMap<T>& m) {
  return PlaneMap<T>::FromScaleMap(m.scale_map().inverse());
}

/// The homothety H(phi(p0), xi), which satisfies
/// phi o H(p0, xi) == H(phi(p0), xi) o phi.
template <class T>
ScaleMap<T> ConjugateHomothety(const PlaneMap<T>& phi, const Vec2<T>& p0, const T& xi) {
  if (xi == 0) throw Error(ErrorCode::kDegenerateRatio, "conjugation ratio 0");
  return ScaleMap<T>::Homothety(phi(p0), xi);
}

template <class T>
struct SixPointResult {
  Vec2<T> p1, x1, x2, x3, x4, x5;
  Vec2<T> recovered;  // H(x1, 1/lambda)(x5)
  bool verdict = false;
};

/// Builds P1 and X1..X5 from (e1, p0, x0, lambda, xi):
///   P1 = H(e1, lambda)(p0)     X1 = H(p0, xi)(x0)     X2 = H(P1, 1/xi)(X1)
///   X3 = H(e1, lambda)(X1)     X4 = H(P1, 1/xi)(X3)   X5 = H(X4, xi)(X2)
/// and reports whether H(X1, 1/lambda)(X5) == x0. Exact on Rational.
template <class T>
SixPointResult<T> SixPointIdentity(const Vec2<T>& e1, const Vec2<T>& p0, const Vec2<T>& x0,
                                   const T& lambda, const T& xi) {
  if (lambda == 0 || xi == 0) {
    throw Error(ErrorCode::kDegenerateRatio, "six-point identity needs nonzero ratios");
  }
  using H = ScaleMap<T>;
  SixPointResult<T> r;
  const T inv_xi = T(1) / xi;
  r.p1 = H::Homothety(e1, lambda)(p0);
  r.x1 = H::Homothety(p0, xi)(x0);
  r.x2 = H::Homothety(r.p1, inv_xi)(r.x1);
  r.x3 = H::Homothety(e1, lambda)(r.x1);
  r.x4 = H::Homothety(r.p1, inv_xi)(r.x3);
  r.x5 = H::Homothety(r.x4, xi)(r.x2);
  r.recovered = H::Homothety(r.x1, T(T(1) / lambda))(r.x5);
  r.verdict = (r.recovered == x0);
  return r;
}

/// Orientation-preserving isometry x -> R(angle) x + shift. Only used to
/// pose isometric copies; not part of the homothety group.
struct RigidMotion {
  double angle = 0;
  Point shift{0, 0};

  Point operator()(const Point& x) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * x.x - s * x.y + shift.x, s * x.x + c * x.y + shift.y};
  }
};

}  // namespace carousel

#endif  // CAROUSEL_TRANSFORMS_HPP_
