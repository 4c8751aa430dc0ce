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

#include "carousel/serialize.hpp"

#include <charconv>
#include <cstdlib>
#include <regex>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace carousel {
namespace {

using Big = boost::multiprecision::cpp_dec_float_50;

[[noreturn]] void Bad(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

Big EvaluateBig(std::string_view text) {
  static const std::regex kForm(
      R"(\s*(-)?\s*(?:([0-9]+(?:\.[0-9]*)?)(?:\s*/\s*([0-9]+(?:\.[0-9]*)?))?)?\s*(\*?\s*sqrt3)?\s*)");
  std::cmatch m;
  const std::string s(text);
  if (!std::regex_match(s.c_str(), m, kForm) || (!m[2].matched && !m[4].matched)) {
    Bad("unreadable scalar \"" + s + "\"");
  }
  if (m[4].matched && m[2].matched && m[4].str().find('*') == std::string::npos) {
    Bad("missing '*' in \"" + s + "\"");
  }
  Big v = m[2].matched ? Big(m[2].str()) : Big(1);
  if (m[3].matched) {
    const Big den(m[3].str());
    if (den == 0) Bad("zero denominator in \"" + s + "\"");
    v /= den;
  }
  if (m[4].matched) v *= boost::multiprecision::sqrt(Big(3));
  return m[1].matched ? Big(-v) : v;
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string Kind(const Json& j) {
  const Json& k = Field(j, "kind");
  if (!k.is_string()) Bad("kind must be a string");
  return k.get<std::string>();
}

Json PointList(const std::vector<Point>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(ToJson(p));
  return a;
}

std::vector<Point> PointListFromJson(const Json& j) {
  if (!j.is_array()) Bad("expected a list of points");
  std::vector<Point> out;
  for (const auto& e : j) out.push_back(PointFromJson(e));
  return out;
}

Json PieceToJson(const CurvedPiece& piece) {
  if (const auto* d = std::get_if<Disk>(&piece)) {
    return ToJson(ConvexBody::MakeDisk(d->center, d->radius));
  }
  Json disks = Json::array();
  for (const auto& d : std::get<DiskIntersection>(piece).disks) disks.push_back(ToJson(d));
  return {{"kind", "disk_intersection"}, {"disks", disks}};
}

}  // namespace

std::string Evaluate50(std::string_view symbolic) {
  return EvaluateBig(symbolic).str(50, std::ios_base::scientific);
}

double ScalarFromJson(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string digits = Evaluate50(j.get<std::string>());
    return std::strtod(digits.c_str(), nullptr);
  }
  Bad("expected a number or a symbolic string");
}

std::string FormatDouble(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

// -0.0 would be written as such.
Json ToJson(const Point& p) { return Json::array({p.x + 0.0, p.y + 0.0}); }

Point PointFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 2) Bad("a point is a pair [x, y]");
  return {ScalarFromJson(j[0]), ScalarFromJson(j[1])};
}

Json ToJson(const Disk& d) { return {{"center", ToJson(d.center)}, {"radius", d.radius}}; }

Disk DiskFromJson(const Json& j) {
  return {PointFromJson(Field(j, "center")), ScalarFromJson(Field(j, "radius"))};
}

Json ToJson(const ConvexBody& u) {
  return std::visit(
      [](const auto& r) -> Json {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Polygon>) {
          return {{"kind", "polygon"}, {"vertices", PointList(r.vertices)}};
        } else if constexpr (std::is_same_v<R, Disk>) {
          return {{"kind", "disk"}, {"center", ToJson(r.center)}, {"radius", r.radius}};
        } else if constexpr (std::is_same_v<R, DiskIntersection>) {
          return PieceToJson(r);
        } else {
          Json bases = Json::array();
          for (const auto& b : r.bases) bases.push_back(PieceToJson(b));
          return {{"kind", "hull_of_union"}, {"bases", bases}, {"extra", PointList(r.extra)}};
        }
      },
      u.rep());
}

ConvexBody BodyFromJson(const Json& j) {
  const std::string kind = Kind(j);
  if (kind == "polygon") return ConvexBody::MakePolygon(PointListFromJson(Field(j, "vertices")));
  if (kind == "disk") {
    const Disk d = DiskFromJson(j);
    return ConvexBody::MakeDisk(d.center, d.radius);
  }
  if (kind == "disk_intersection") {
    const Json& list = Field(j, "disks");
    if (!list.is_array()) Bad("disks must be a list");
    std::vector<Disk> disks;
    for (const auto& e : list) disks.push_back(DiskFromJson(e));
    return ConvexBody::MakeDiskIntersection(std::move(disks));
  }
  if (kind == "hull_of_union") {
    std::vector<ConvexBody> parts;
    if (j.contains("bases")) {
      for (const auto& b : j.at("bases")) parts.push_back(BodyFromJson(b));
    }
    if (j.contains("extra")) {
      const auto extra = PointListFromJson(j.at("extra"));
      if (!extra.empty()) parts.push_back(ConvexBody::MakePolygon(extra));
    }
    return ConvexBody::HullOfBodies(parts);
  }
  Bad("unknown body kind \"" + kind + "\"");
}

Json ToJson(const Map& m) {
  if (m.is_translation()) {
    return {{"kind", "translation"}, {"vector", ToJson(m.translation_vector())}};
  }
  // The offset makes the round trip exact; the center is for readers.
  return {{"kind", "homothety"},
          {"center", ToJson(*m.center())},
          {"ratio", m.ratio()},
          {"offset", ToJson(m.offset())}};
}

Map MapFromJson(const Json& j) {
  const std::string kind = Kind(j);
  if (kind == "translation") return Map::Translation(PointFromJson(Field(j, "vector")));
  if (kind == "homothety") {
    if (j.contains("offset")) {
      return Map::FromScaleMap(
          ScaleMap<double>(ScalarFromJson(Field(j, "ratio")), PointFromJson(j.at("offset"))));
    }
    return Map::Homothety(PointFromJson(Field(j, "center")), ScalarFromJson(Field(j, "ratio")));
  }
  Bad("unknown map kind \"" + kind + "\"");
}

Json ToJson(const std::array<Point, 3>& tri) {
  return Json::array({ToJson(tri[0]), ToJson(tri[1]), ToJson(tri[2])});
}

std::array<Point, 3> TriangleFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 3) Bad("a triangle is three points");
  return {PointFromJson(j[0]), PointFromJson(j[1]), PointFromJson(j[2])};
}

}  // namespace carousel
