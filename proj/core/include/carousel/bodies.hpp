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

// Compact convex bodies and their queries.
//
// Every body carries a support profile: the support function
// h(t) = max <u(t), x> over the body, written piecewise as
// h(t) = <u(t), a> + r on consecutive angle intervals covering [0, 2pi).
// Polygons contribute vertex pieces (r = 0), disks one piece, disk
// intersections alternate arc and corner pieces, and the hull of a union is
// the upper envelope of its parts. Inclusion margins, signed depth and
// Hausdorff gaps then reduce to minimizing or maximizing a sinusoid on each
// common interval, which is done in closed form.

#ifndef CAROUSEL_BODIES_HPP_
#define CAROUSEL_BODIES_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "carousel/geom.hpp"
#include "carousel/transforms.hpp"

namespace carousel {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

struct Polygon {
  std::vector<Point> vertices;  // strictly convex, CCW, lexmin first
};

struct Disk {
  Point center;
  double radius = 0;
};

struct Arc {
  int disk = 0;  // index into DiskIntersection::disks
  double lo = 0;  // angles on that circle, lo <= hi < lo + 2pi
  double hi = 0;
};

struct DiskIntersection {
  std::vector<Disk> disks;
  std::vector<Arc> arcs;  // boundary arcs in CCW order
};

using CurvedPiece = std::variant<Disk, DiskIntersection>;

/// conv(bases U extra). Bases are only the curved kinds; polygons are folded
/// into the point list when the hull is built.
struct HullOfUnion {
  std::vector<CurvedPiece> bases;
  std::vector<Point> extra;
};

/// h(t) = <u(t), a> + r for t in [lo, hi].
struct SupportPiece {
  double lo = 0;
  double hi = 0;
  Point a;
  double r = 0;

  Point start() const { return a + r * UnitAt(lo); }
  Point end() const { return a + r * UnitAt(hi); }
};

struct SupportProfile {
  std::vector<SupportPiece> pieces;

  static SupportProfile OfPoint(const Point& p);
  std::size_t locate(double theta) const;
  double value(double theta) const;
};

enum class BodyKind { kPolygon, kDisk, kDiskIntersection, kHullOfUnion };

std::string_view ToString(BodyKind k);

class ConvexBody {
 public:
  using Rep = std::variant<Polygon, Disk, DiskIntersection, HullOfUnion>;

  /// Convex hull of the points (EmptyInput on an empty list).
  static ConvexBody MakePolygon(std::span<const Point> points);
  static ConvexBody MakePolygon(const std::vector<Point>& points) {
    return MakePolygon(std::span<const Point>(points));
  }
  static ConvexBody Singleton(const Point& p);
  /// Radius 0 yields a singleton; negative radius is BadRadius.
  static ConvexBody MakeDisk(const Point& center, double radius);
  /// EmptyInput for no disks, EmptyIntersection when the disks miss.
  static ConvexBody MakeDiskIntersection(std::vector<Disk> disks);
  static ConvexBody HullOf(const ConvexBody& u, std::span<const Point> extra);
  static ConvexBody HullOf(const ConvexBody& u, const std::vector<Point>& extra) {
    return HullOf(u, std::span<const Point>(extra));
  }
  /// conv of several bodies.
  static ConvexBody HullOfBodies(std::span<const ConvexBody> parts);

  BodyKind kind() const { return static_cast<BodyKind>(rep_.index()); }
  const Rep& rep() const { return rep_; }
  const SupportProfile& profile() const { return *profile_; }

  bool is_singleton() const;
  /// A point of the body; interior when the interior is nonempty.
  Point inner_point() const;
  /// Radius of a disk around inner_point() covering the body.
  double covering_radius() const;

 private:
  ConvexBody(Rep rep, SupportProfile profile);
  Rep rep_;
  std::shared_ptr<const SupportProfile> profile_;
};

struct PointedSupportLine {
  Point support;
  Line line;
};

/// Non-degenerate CCW triangle.
struct Triangle {
  Point a0, a1, a2;

  Triangle(Point p0, Point p1, Point p2);
  const Point& vertex(int j) const { return j == 0 ? a0 : (j == 1 ? a1 : a2); }
  ConvexBody body() const;
};

enum class Containment { kClosed, kStrict };

// Support function queries.
double SupportValue(const ConvexBody& u, const Point& normal);
/// Canonical maximizer: lexicographic minimum among ties.
Point SupportPoint(const ConvexBody& u, const Point& normal);
/// The face in the given outward normal: {p} or an edge [p, q] with p < q.
std::pair<Point, Point> SupportSet(const ConvexBody& u, const Point& normal);

/// min over t of (h_a(t) - h_b(t)) with the minimizing angle.
struct Extremum {
  double value = 0;
  double theta = 0;
};
Extremum MinSupportGap(const SupportProfile& a, const SupportProfile& b);
Extremum MaxSupportGap(const SupportProfile& a, const SupportProfile& b);

/// Distance to the boundary inside, minus the distance to the body outside.
double SignedDepth(const ConvexBody& u, const Point& p);
double DistanceToBody(const ConvexBody& u, const Point& p);
Point ClosestPoint(const ConvexBody& u, const Point& p);

bool ContainsPoint(const ConvexBody& u, const Point& p, Containment mode = Containment::kClosed,
                   Tolerance tol = {});

/// min over directions of h_a - h_b; nonnegative iff b is inside a.
double InclusionMargin(const ConvexBody& a, const ConvexBody& b);

struct InclusionReport {
  bool included = false;
  double margin = 0;
  Point witness;  // point of b farthest outside a along the worst direction
};
InclusionReport CheckInclusion(const ConvexBody& a, const ConvexBody& b, Tolerance tol = {});
bool Includes(const ConvexBody& a, const ConvexBody& b, Tolerance tol = {});
/// Every point of b is interior to a, with margin above eps.
bool LooselyIncludes(const ConvexBody& a, const ConvexBody& b, Tolerance tol = {});

/// max over v of dist(., u) for u inside v; PreconditionViolated otherwise.
double Abundance(const ConvexBody& u, const ConvexBody& v, Tolerance tol = {});

/// {x : dist(x, u) < d}. Open, so only a membership predicate.
class OpenExtension {
 public:
  OpenExtension(ConvexBody u, double d);
  bool contains(const Point& p) const { return DistanceToBody(body_, p) < d_; }
  double radius() const { return d_; }
  const ConvexBody& body() const { return body_; }

 private:
  ConvexBody body_;
  double d_;
};

PointedSupportLine SupportingLine(const ConvexBody& u, const Direction<double>& d);
/// Supporting line with p strictly on its right; NotSeparable if p is in u.
PointedSupportLine SeparatingSupportLine(const ConvexBody& u, const Point& p, Tolerance tol = {});

struct TangentPair {
  PointedSupportLine right;  // directed from f toward its tangent point
  PointedSupportLine left;   // directed from its tangent point toward f
};
TangentPair TangentsFromExternalPoint(const ConvexBody& u, const Point& f, Tolerance tol = {});

struct LineBoundaryHit {
  std::vector<Point> points;  // 0, 1 or 2 points; segment endpoints when segment
  bool segment = false;
};
LineBoundaryHit LineBoundaryIntersections(const ConvexBody& u, const Line& l, Tolerance tol = {});

bool IsEdgeFree(const ConvexBody& u, Tolerance tol = {});

/// n points spread along the boundary by arc length, starting at the piece
/// containing direction 0.
std::vector<Point> BoundarySamples(const ConvexBody& u, int n);

ConvexBody TransformBody(const Map& m, const ConvexBody& u);
ConvexBody TransformBody(const RigidMotion& m, const ConvexBody& u);

/// Barycentric split p = l0 * x + l1 * a1 + l2 * a2 with x in u.
struct BarycentricDecomposition {
  double l0 = 0, l1 = 0, l2 = 0;
  Point x;
};
BarycentricDecomposition CaratheodoryDecompose(const Point& p, const ConvexBody& u,
                                               const Point& a1, const Point& a2,
                                               Tolerance tol = {});

}  // namespace carousel

#endif  // CAROUSEL_BODIES_HPP_
