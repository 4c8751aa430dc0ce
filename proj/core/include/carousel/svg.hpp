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

// SVG 1.1 scenes. Output is deterministic: coordinates are printed with six
// decimals and elements appear in a fixed order (triangle, bodies, witness
// hull, comets). The y axis points up in scene coordinates.

#ifndef CAROUSEL_SVG_HPP_
#define CAROUSEL_SVG_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "carousel/theorem.hpp"

namespace carousel {

struct CometLayer {
  Point focus;
  ConvexBody nucleus;
};

struct Scene {
  std::optional<std::array<Point, 3>> triangle;
  std::vector<ConvexBody> bodies;
  /// Drawn as a dashed outline of conv(bodies[k] u {A_i : i != j}); needs
  /// the triangle and two bodies.
  std::optional<Witness> witness;
  std::vector<CometLayer> comets;
  int width = 640;
};

/// Class names used: "triangle", "body", "witness-hull", "comet", "ray",
/// "front-arc".
std::string RenderSvg(const Scene& scene);

}  // namespace carousel

#endif  // CAROUSEL_SVG_HPP_
