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

#ifndef CAROUSEL_HULL_HPP_
#define CAROUSEL_HULL_HPP_

#include <algorithm>
#include <span>
#include <vector>

#include "carousel/geom.hpp"

namespace carousel {

/// Andrew's monotone chain. Returns the strictly convex CCW vertex cycle
/// starting at the lexicographically smallest point. Duplicates and
/// collinear points are dropped; one point yields {p}, collinear input
/// yields its two extreme points.
template <class T>
std::vector<Vec2<T>> ConvexHullVertices(std::span<const Vec2<T>> points) {
  if (points.empty()) throw Error(ErrorCode::kEmptyInput, "convex hull of nothing");
  std::vector<Vec2<T>> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Vec2<T>> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && Orient2d(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && Orient2d(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

template <class T>
std::vector<Vec2<T>> ConvexHullVertices(const std::vector<Vec2<T>>& points) {
  return ConvexHullVertices(std::span<const Vec2<T>>(points));
}

/// Closed membership in the hull of a canonical CCW vertex cycle; exact.
template <class T>
bool HullContains(std::span<const Vec2<T>> hull, const Vec2<T>& p) {
  const std::size_t n = hull.size();
  if (n == 1) return hull[0] == p;
  if (n == 2) {
    if (Orient2d(hull[0], hull[1], p) != 0) return false;
    return Dot(Vec2<T>(p - hull[0]), Vec2<T>(hull[1] - hull[0])) >= 0 &&
           Dot(Vec2<T>(p - hull[1]), Vec2<T>(hull[0] - hull[1])) >= 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (Orient2d(hull[i], hull[(i + 1) % n], p) < 0) return false;
  }
  return true;
}

/// Strict interior membership; false for hulls with empty interior.
template <class T>
bool HullStrictlyContains(std::span<const Vec2<T>> hull, const Vec2<T>& p) {
  const std::size_t n = hull.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (Orient2d(hull[i], hull[(i + 1) % n], p) <= 0) return false;
  }
  return true;
}

}  // namespace carousel

#endif  // CAROUSEL_HULL_HPP_
