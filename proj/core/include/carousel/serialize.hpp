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

// JSON forms of points, bodies, maps and triangles.
//
// Scalars are written as numbers. On input a scalar may also be a string
// holding a symbolic value: "p", "p/q", "a*sqrt3", "a/b*sqrt3" or
// "sqrt3", each with an optional leading minus. Such strings are evaluated
// with 50 significant digits and then rounded to double.
//
//   point     [x, y]
//   polygon   {"kind": "polygon", "vertices": [[x, y], ...]}
//   disk      {"kind": "disk", "center": [x, y], "radius": r}
//   disks     {"kind": "disk_intersection", "disks": [{"center": .., "radius": ..}, ...]}
//   hull      {"kind": "hull_of_union", "bases": [body, ...], "extra": [[x, y], ...]}
//   map       {"kind": "homothety", "center": [x, y], "ratio": r}
//             (written with "offset": [bx, by] too, x -> r x + b, which wins on input)
//             {"kind": "translation", "vector": [x, y]}
//   triangle  [[x, y], [x, y], [x, y]]

#ifndef CAROUSEL_SERIALIZE_HPP_
#define CAROUSEL_SERIALIZE_HPP_

#include <array>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "carousel/bodies.hpp"
#include "carousel/convex_geometry.hpp"

namespace carousel {

using Json = nlohmann::json;

/// ParseError on anything else than a number or a symbolic string.
double ScalarFromJson(const Json& j);
/// The symbolic value to 50 significant digits, as a decimal string.
std::string Evaluate50(std::string_view symbolic);

Json ToJson(const Point& p);
Point PointFromJson(const Json& j);

Json ToJson(const ConvexBody& u);
ConvexBody BodyFromJson(const Json& j);

Json ToJson(const Map& m);
Map MapFromJson(const Json& j);

Json ToJson(const std::array<Point, 3>& tri);
std::array<Point, 3> TriangleFromJson(const Json& j);

Json ToJson(const Disk& d);
Disk DiskFromJson(const Json& j);

/// Shortest decimal text that reads back to the same double.
std::string FormatDouble(double v);

}  // namespace carousel

#endif  // CAROUSEL_SERIALIZE_HPP_
