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

// The carousel theorem for compact convex sets, as executable checks.
//
// For a triangle A0 A1 A2 containing U0 and U1, where U1 is a positive
// homothetic or translated copy of U0 (or one of them is a point), some
// (j, k) satisfies
//
//   U_{1-k}  is a subset of  conv(U_k  u  {A0, A1, A2} \ {A_j}).
//
// Everything here either searches for such a pair or reproduces one of the
// geometric facts the argument for it rests on.

#ifndef CAROUSEL_THEOREM_HPP_
#define CAROUSEL_THEOREM_HPP_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "carousel/bodies.hpp"
#include "carousel/transforms.hpp"

namespace carousel {

struct Witness {
  int j = 0;  // dropped vertex
  int k = 0;  // body whose hull with the other two vertices is the cover

  friend bool operator==(const Witness&, const Witness&) = default;
  friend auto operator<=>(const Witness& a, const Witness& b) {
    if (a.k != b.k) return a.k <=> b.k;
    return a.j <=> b.j;
  }
};

/// For distinct interior points b0 != b1 of tri: the first (k, j) with
/// b_{1-k} strictly inside conv(b_k, tri minus A_j). Exact.
Witness CarouselWitness(const Point& b0, const Point& b1, const Triangle& tri);

/// conv(U_k u {A_i : i != j}) includes U_{1-k}.
bool WitnessHolds(const ConvexBody& u0, const ConvexBody& u1, const std::array<Point, 3>& a,
                  const Witness& w, Tolerance tol = {});

/// Every passing (j, k), ordered by (k, j). The triangle must contain both
/// bodies. The array form accepts collinear vertices, in which case the
/// covers degenerate to segments and hulls with segments.
std::vector<Witness> WitnessSearch(const ConvexBody& u0, const ConvexBody& u1,
                                   const Triangle& tri, Tolerance tol = {});
std::vector<Witness> WitnessSearch(const ConvexBody& u0, const ConvexBody& u1,
                                   const std::array<Point, 3>& a, Tolerance tol = {});

/// Shadow of an edge-free nucleus lit from an outside focus.
class Comet {
 public:
  /// NotExternal if f is in u, EdgeFreeRequired for bodies with edges,
  /// DegenerateNucleus for a point.
  static Comet Build(const Point& f, const ConvexBody& u, Tolerance tol = {});

  const Point& focus() const { return focus_; }
  const ConvexBody& nucleus() const { return nucleus_; }
  const TangentPair& tangents() const { return tangents_; }
  /// Ends of the front arc: right tangent point, then left tangent point.
  std::pair<Point, Point> front_arc_ends() const {
    return {tangents_.right.support, tangents_.left.support};
  }
  /// Points of the front arc from the right end to the left end.
  std::vector<Point> front_arc(int n) const;

  /// Largest depth in the nucleus along the segment from the focus to p;
  /// positive iff p is an interior point of the comet.
  double shadow_depth(const Point& p) const;
  bool contains(const Point& p, Containment mode = Containment::kClosed,
                Tolerance tol = {}) const;
  /// Strictly inside the cone of the two tangent lines.
  bool in_open_cone(const Point& p) const;

 private:
  Comet(Point f, ConvexBody u, TangentPair t, double lo, double hi)
      : focus_(f), nucleus_(std::move(u)), tangents_(std::move(t)), arc_lo_(lo), arc_hi_(hi) {}
  Point focus_;
  ConvexBody nucleus_;
  TangentPair tangents_;
  double arc_lo_, arc_hi_;  // outward normal angles spanned by the front arc
};

struct LooseCometReport {
  bool holds = false;
  int samples = 0;
  int failures = 0;
  double min_depth = 0;  // smallest shadow depth seen in the larger comet
};

/// With u2 = H(f, lambda)(u1), 0 < lambda < 1, and g strictly inside the
/// region between f and the front arc of the comet of u2, checks on about a
/// thousand points of the comet of u1 that they are interior to the comet
/// of u2 lit from g. PreconditionViolated if g is not in that region.
LooseCometReport CometLooseInclusionCheck(const ConvexBody& u1, const Point& f, double lambda,
                                          const Point& g, Tolerance tol = {});

/// A common pointed supporting line, if any. The support point is the
/// lexicographically smallest common one.
std::optional<PointedSupportLine> InternallyTangent(const ConvexBody& u0, const ConvexBody& u1,
                                                    Tolerance tol = {});

enum class TangencyKind { kCenterContact, kTranslationIdentity };
std::string_view ToString(TangencyKind k);

struct TangencyClass {
  TangencyKind kind = TangencyKind::kTranslationIdentity;
  Point center;            // contact point for kCenterContact
  bool u0_in_u1 = true;    // ratio > 1 (or identity)
  bool u1_in_u0 = true;    // ratio < 1 (or identity)
};

/// u1 = m(u0). The identity map is kTranslationIdentity; a homothety must
/// touch exactly at its center, with inclusion decided by its ratio.
/// EdgeFreeRequired, PreconditionViolated (point or not tangent), or
/// LemmaViolation when the expected structure is absent.
TangencyClass TangencyClassify(const ConvexBody& u0, const Map& m, Tolerance tol = {});

/// What the tangency structure looks like for bodies with edges, where the
/// edge-free conclusions may fail.
struct TangencyReport {
  bool edge_free = false;
  bool internally_tangent = false;
  std::optional<PointedSupportLine> common_line;
  std::vector<Point> contact;  // samples of bd(u0) lying on bd(u1)
  bool contact_is_center = false;
  bool u0_in_u1 = false;
  bool u1_in_u0 = false;
  bool is_identity = false;
  /// Both conclusions of the edge-free statement fail.
  bool violates = false;
};
TangencyReport TangencyReportFor(const ConvexBody& u0, const Map& m, Tolerance tol = {});

enum class Dichotomy { kU0InU1, kU1InU0 };
std::string_view ToString(Dichotomy d);

/// With U0(xi) = H(p0, xi)(u0) and U1(xi) = H(m(p0), xi)(m(u0)) internally
/// tangent, reports which of u0 in u1 and U0(xi) in U1(xi), or the reverse
/// pair, holds.
Dichotomy TangencyInclusionDichotomy(const ConvexBody& u0, const Map& m, const Point& p0,
                                     double xi, Tolerance tol = {});

/// member(xi) = H(anchor, xi)(body), with member(0) the anchor itself.
class ShrinkFamily {
 public:
  /// The anchor must lie in the body (PreconditionViolated otherwise).
  ShrinkFamily(ConvexBody body, const Point& anchor, Tolerance tol = {});
  ConvexBody member(double xi) const;
  const ConvexBody& body() const { return body_; }
  const Point& anchor() const { return anchor_; }

 private:
  ConvexBody body_;
  Point anchor_;
};

/// conv({a0, a1} u u0_xi).
ConvexBody CurvedTrapezoid(const ConvexBody& u0_xi, const Point& a0, const Point& a1);

struct ShrinkResult {
  double xi_max = 0;
  Witness witness;                 // first witness at xi_max
  std::vector<Witness> witnesses;  // all witnesses at xi_max
  bool reached_one = false;
  bool non_interval = false;       // a larger good xi exists past a bad one
  int evaluations = 0;
};

/// Supremum of the xi in [0, 1] for which the shrunken pair
/// H(p0, xi)(u0), H(p1, xi)(u1) has a witness, by bisection.
/// NoInitialWitness when already a tiny xi has none.
ShrinkResult MaxShrinkParameter(const ConvexBody& u0, const ConvexBody& u1, const Triangle& tri,
                                const Point& p0, const Point& p1, Tolerance tol = {});
/// Same with p1 = m(p0).
ShrinkResult MaxShrinkParameter(const ConvexBody& u0, const ConvexBody& u1, const Triangle& tri,
                                const Point& p0, const Map& m, Tolerance tol = {});

/// Deterministic sequence of disks that contain u: first a slightly
/// inflated covering disk, then dyadic grids of centers of increasing
/// resolution, each with its covering radius rounded up to a dyadic value.
class CoveringDiskSequence {
 public:
  explicit CoveringDiskSequence(const ConvexBody& u, double box_factor = 32.0);
  /// The first n disks.
  std::vector<Disk> take(int n);

 private:
  void next_level();
  const ConvexBody& body_;
  Point center_;
  double box_;
  int level_ = -1;
  std::vector<Disk> disks_;
};

/// U_n: intersection of the first n disks of the covering sequence.
ConvexBody EdgeFreeApprox(const ConvexBody& u, int n);

struct CrossingAnalysis {
  int outside_runs_0 = 0;  // components of u0 minus u1
  int outside_runs_1 = 0;
  bool crossing = false;
  bool tangential = false;  // some boundary sample sat on the other boundary
};

/// Fejes-Toth crossing: both differences are disconnected.
CrossingAnalysis AnalyzeCrossing(const ConvexBody& u0, const ConvexBody& u1,
                                 Tolerance tol = {}, int samples = 4096);
bool FejesTothCrossing(const ConvexBody& u0, const ConvexBody& u1, Tolerance tol = {});

}  // namespace carousel

#endif  // CAROUSEL_THEOREM_HPP_
