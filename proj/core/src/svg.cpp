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

#include "carousel/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace carousel {
namespace {

constexpr int kOutlineSamples = 256;

std::string Num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

struct Box {
  double x0 = 1e300, y0 = 1e300, x1 = -1e300, y1 = -1e300;
  void add(const Point& p) {
    x0 = std::min(x0, p.x);
    y0 = std::min(y0, p.y);
    x1 = std::max(x1, p.x);
    y1 = std::max(y1, p.y);
  }
  bool empty() const { return x0 > x1; }
};

std::vector<Point> Outline(const ConvexBody& u) {
  if (const auto* poly = std::get_if<Polygon>(&u.rep())) return poly->vertices;
  return BoundarySamples(u, kOutlineSamples);
}

// Scene y points up; SVG y points down.
std::string Path(const std::vector<Point>& pts, bool closed) {
  std::ostringstream os;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    os << (i == 0 ? "M" : " L") << Num(pts[i].x) << ' ' << Num(-pts[i].y);
  }
  if (closed) os << " Z";
  return os.str();
}

}  // namespace

std::string RenderSvg(const Scene& scene) {
  std::vector<std::vector<Point>> outlines;
  for (const auto& b : scene.bodies) outlines.push_back(Outline(b));

  Box box;
  if (scene.triangle) {
    for (const auto& p : *scene.triangle) box.add(p);
  }
  for (const auto& o : outlines) {
    for (const auto& p : o) box.add(p);
  }
  for (const auto& c : scene.comets) {
    box.add(c.focus);
    for (const auto& p : Outline(c.nucleus)) box.add(p);
  }
  if (box.empty()) box = {-1, -1, 1, 1};
  const double pad = 0.05 * std::max({box.x1 - box.x0, box.y1 - box.y0, 1e-6});
  const double w = box.x1 - box.x0 + 2 * pad, h = box.y1 - box.y0 + 2 * pad;
  const double stroke = std::max(w, h) / 400;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << scene.width
     << "\" height=\"" << static_cast<int>(std::lround(scene.width * h / w)) << "\" viewBox=\""
     << Num(box.x0 - pad) << ' ' << Num(-box.y1 - pad) << ' ' << Num(w) << ' ' << Num(h) << "\">\n"
     << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << Num(stroke) << "\">\n";

  if (scene.triangle) {
    const auto& t = *scene.triangle;
    os << "<path class=\"triangle\" d=\"" << Path({t[0], t[1], t[2]}, true) << "\"/>\n";
  }
  for (std::size_t i = 0; i < outlines.size(); ++i) {
    os << "<path class=\"body\" id=\"u" << i << "\" fill=\"" << (i == 0 ? "#9ecae1" : "#fdae6b")
       << "\" fill-opacity=\"0.6\" d=\"" << Path(outlines[i], true) << "\"/>\n";
  }
  if (scene.witness && scene.triangle && scene.bodies.size() >= 2) {
    const Witness& wt = *scene.witness;
    std::vector<Point> extra;
    for (int i = 0; i < 3; ++i) {
      if (i != wt.j) extra.push_back((*scene.triangle)[i]);
    }
    const ConvexBody hull = ConvexBody::HullOf(scene.bodies[wt.k], extra);
    os << "<path class=\"witness-hull\" stroke-dasharray=\"" << Num(4 * stroke) << ' '
       << Num(2 * stroke) << "\" d=\"" << Path(Outline(hull), true) << "\"/>\n";
  }
  for (const auto& c : scene.comets) {
    const Comet comet = Comet::Build(c.focus, c.nucleus);
    const auto [r, l] = comet.front_arc_ends();
    // The shadow: from each tangent point away from the focus.
    const double reach = 2 * std::max(w, h);
    const Point far_r = r + reach * Normalized(r - c.focus);
    const Point far_l = l + reach * Normalized(l - c.focus);
    std::vector<Point> shade = comet.front_arc(64);
    shade.push_back(far_l);
    shade.push_back(far_r);
    os << "<g class=\"comet\">\n"
       << "<path class=\"comet-shade\" fill=\"#bbbbbb\" fill-opacity=\"0.5\" stroke=\"none\" d=\""
       << Path(shade, true) << "\"/>\n"
       << "<line class=\"ray\" x1=\"" << Num(r.x) << "\" y1=\"" << Num(-r.y) << "\" x2=\""
       << Num(far_r.x) << "\" y2=\"" << Num(-far_r.y) << "\"/>\n"
       << "<line class=\"ray\" x1=\"" << Num(l.x) << "\" y1=\"" << Num(-l.y) << "\" x2=\""
       << Num(far_l.x) << "\" y2=\"" << Num(-far_l.y) << "\"/>\n"
       << "<path class=\"front-arc\" stroke-width=\"" << Num(2 * stroke) << "\" d=\""
       << Path(comet.front_arc(64), false) << "\"/>\n"
       << "<circle class=\"focus\" cx=\"" << Num(c.focus.x) << "\" cy=\"" << Num(-c.focus.y)
       << "\" r=\"" << Num(2 * stroke) << "\" fill=\"black\"/>\n"
       << "</g>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace carousel
