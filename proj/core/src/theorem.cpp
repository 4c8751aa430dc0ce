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

#include "carousel/theorem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <tuple>

namespace carousel {
namespace {

double NormAngle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0;
  return t;
}

double AngleOf(const Point& v) { return NormAngle(std::atan2(v.y, v.x)); }

double BodyScale(const ConvexBody& u) {
  const Point c = u.inner_point();
  return 1 + std::abs(c.x) + std::abs(c.y) + u.covering_radius();
}

bool StrictlyInside(const Point& p, const Point& a, const Point& b, const Point& c) {
  return Orient2d(a, b, p) > 0 && Orient2d(b, c, p) > 0 && Orient2d(c, a, p) > 0;
}

// Maximum of a concave function on [0, 1].
template <class F>
double ConcaveMax(F&& f) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = 0, b = 1;
  double x1 = b - kInvPhi * (b - a), x2 = a + kInvPhi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  return std::max({f1, f2, f(0.0), f(1.0)});
}

}  // namespace

Witness CarouselWitness(const Point& b0, const Point& b1, const Triangle& tri) {
  if (b0 == b1) throw Error(ErrorCode::kPreconditionViolated, "points must be distinct");
  for (const Point* b : {&b0, &b1}) {
    if (!StrictlyInside(*b, tri.a0, tri.a1, tri.a2)) {
      throw Error(ErrorCode::kPreconditionViolated, "points must be interior to the triangle");
    }
  }
  for (int k = 0; k < 2; ++k) {
    const Point& bk = k == 0 ? b0 : b1;
    const Point& other = k == 0 ? b1 : b0;
    for (int j = 0; j < 3; ++j) {
      if (StrictlyInside(other, tri.vertex((j + 1) % 3), tri.vertex((j + 2) % 3), bk)) {
        return {j, k};
      }
    }
  }
  throw Error(ErrorCode::kLemmaViolation, "no (j, k) for two interior points");
}

bool WitnessHolds(const ConvexBody& u0, const ConvexBody& u1, const std::array<Point, 3>& a,
                  const Witness& w, Tolerance tol) {
  const ConvexBody& uk = w.k == 0 ? u0 : u1;
  const ConvexBody& other = w.k == 0 ? u1 : u0;
  const std::vector<Point> rest{a[(w.j + 1) % 3], a[(w.j + 2) % 3]};
  return Includes(ConvexBody::HullOf(uk, rest), other, tol);
}

std::vector<Witness> WitnessSearch(const ConvexBody& u0, const ConvexBody& u1,
                                   const std::array<Point, 3>& a, Tolerance tol) {
  const ConvexBody frame = ConvexBody::MakePolygon({a[0], a[1], a[2]});
  if (!Includes(frame, u0, tol) || !Includes(frame, u1, tol)) {
    throw Error(ErrorCode::kPreconditionViolated, "bodies must lie in the triangle");
  }
  std::vector<Witness> out;
  for (int k = 0; k < 2; ++k) {
    for (int j = 0; j < 3; ++j) {
      if (WitnessHolds(u0, u1, a, {j, k}, tol)) out.push_back({j, k});
    }
  }
  return out;
}

std::vector<Witness> WitnessSearch(const ConvexBody& u0, const ConvexBody& u1,
                                   const Triangle& tri, Tolerance tol) {
  return WitnessSearch(u0, u1, std::array<Point, 3>{tri.a0, tri.a1, tri.a2}, tol);
}

// Comet ---------------------------------------------------------------------

Comet Comet::Build(const Point& f, const ConvexBody& u, Tolerance tol) {
  if (u.is_singleton()) throw Error(ErrorCode::kDegenerateNucleus, "singleton nucleus");
  if (!IsEdgeFree(u, tol)) throw Error(ErrorCode::kEdgeFreeRequired, "nucleus has an edge");
  if (ContainsPoint(u, f, Containment::kClosed, tol)) {
    throw Error(ErrorCode::kNotExternal, "focus lies in the nucleus");
  }
  TangentPair t = TangentsFromExternalPoint(u, f, tol);
  const double mid = MinSupportGap(u.profile(), SupportProfile::OfPoint(f)).theta;
  const double ar = AngleOf(t.right.line.dir.outward_normal());
  const double al = AngleOf(t.left.line.dir.outward_normal());
  // Walk from the right normal to the left one through the nearest direction.
  const double ccw = NormAngle(al - ar);
  const double lo = ar;
  const double hi = NormAngle(mid - ar) <= ccw ? ar + ccw : ar - (kTwoPi - ccw);
  return Comet(f, u, std::move(t), lo, hi);
}

std::vector<Point> Comet::front_arc(int n) const {
  std::vector<Point> out;
  if (n <= 0) return out;
  if (n == 1) return {tangents_.right.support};
  for (int i = 0; i < n; ++i) {
    const double t = arc_lo_ + (arc_hi_ - arc_lo_) * i / (n - 1);
    out.push_back(SupportPoint(nucleus_, UnitAt(t)));
  }
  out.front() = tangents_.right.support;
  out.back() = tangents_.left.support;
  return out;
}

double Comet::shadow_depth(const Point& p) const {
  // Signed depth is concave, so its maximum along the ray segment is
  // unimodal.
  return ConcaveMax([&](double s) { return SignedDepth(nucleus_, focus_ + s * (p - focus_)); });
}

bool Comet::contains(const Point& p, Containment mode, Tolerance tol) const {
  const double d = shadow_depth(p);
  return mode == Containment::kClosed ? d >= -tol.eps : d > tol.eps;
}

bool Comet::in_open_cone(const Point& p) const {
  return SignedDistance(tangents_.right.line, p) > 0 && SignedDistance(tangents_.left.line, p) > 0;
}

LooseCometReport CometLooseInclusionCheck(const ConvexBody& u1, const Point& f, double lambda,
                                          const Point& g, Tolerance tol) {
  if (!(lambda > 0 && lambda < 1)) {
    throw Error(ErrorCode::kDegenerateRatio, "lambda must lie in (0, 1)");
  }
  const ConvexBody u2 = TransformBody(Map::Homothety(f, lambda), u1);
  const Comet from_f = Comet::Build(f, u2, tol);
  if (!from_f.in_open_cone(g) || from_f.shadow_depth(g) >= -tol.eps) {
    throw Error(ErrorCode::kPreconditionViolated, "g is not between the focus and the front arc");
  }
  const Comet from_g = Comet::Build(g, u2, tol);

  LooseCometReport rep;
  rep.min_depth = std::numeric_limits<double>::infinity();
  constexpr int kAround = 100, kAlong = 10;
  const std::vector<Point> rim = BoundarySamples(u1, kAround);
  for (const Point& y : rim) {
    for (int i = 0; i < kAlong; ++i) {
      const Point x = f + (1.0 + 0.25 * i) * (y - f);
      const double d = from_g.shadow_depth(x);
      rep.min_depth = std::min(rep.min_depth, d);
      ++rep.samples;
      if (!(d > tol.eps)) ++rep.failures;
    }
  }
  rep.holds = rep.failures == 0;
  return rep;
}

// Internal tangency ---------------------------------------------------------

std::optional<PointedSupportLine> InternallyTangent(const ConvexBody& u0, const ConvexBody& u1,
                                                    Tolerance tol) {
  const SupportProfile& a = u0.profile();
  const SupportProfile& b = u1.profile();
  const double eps = std::max(tol.eps, 1e-12) * std::max(BodyScale(u0), BodyScale(u1));

  std::vector<double> cand{MinSupportGap(a, b).theta, MinSupportGap(b, a).theta};
  std::size_t i = 0, j = 0;
  double cur = 0;
  while (i < a.pieces.size() && j < b.pieces.size()) {
    const SupportPiece& p = a.pieces[i];
    const SupportPiece& q = b.pieces[j];
    const double hi = std::min(p.hi, q.hi);
    const Point d = p.a - q.a;
    const double c = p.r - q.r;
    cand.push_back(cur);
    const double len = Norm(d);
    if (len > 0) {
      const double phi = AngleOf(d);
      const double w = std::acos(std::clamp(-c / len, -1.0, 1.0));
      for (double t : {phi + w, phi - w}) {
        t = NormAngle(t);
        if (t >= cur && t <= hi) cand.push_back(t);
      }
    } else if (std::abs(c) <= eps) {
      cand.push_back(0.5 * (cur + hi));
    }
    cur = hi;
    if (p.hi <= hi) ++i;
    if (q.hi <= hi) ++j;
  }

  std::optional<PointedSupportLine> best;
  for (double t : cand) {
    const Point n = UnitAt(t);
    if (std::abs(SupportValue(u0, n) - SupportValue(u1, n)) > eps) continue;
    const auto s0 = SupportSet(u0, n);
    const auto s1 = SupportSet(u1, n);
    const Point dir = PerpLeft(n);
    auto param = [&](const Point& x) { return Dot(x, dir); };
    const double lo0 = std::min(param(s0.first), param(s0.second));
    const double hi0 = std::max(param(s0.first), param(s0.second));
    const double lo1 = std::min(param(s1.first), param(s1.second));
    const double hi1 = std::max(param(s1.first), param(s1.second));
    std::vector<Point> common;
    for (const Point& x : {s0.first, s0.second}) {
      if (param(x) >= lo1 - eps && param(x) <= hi1 + eps) common.push_back(x);
    }
    for (const Point& x : {s1.first, s1.second}) {
      if (param(x) >= lo0 - eps && param(x) <= hi0 + eps) common.push_back(x);
    }
    if (common.empty()) continue;
    const Point s = *std::min_element(common.begin(), common.end());
    if (!best || s < best->support) best = PointedSupportLine{s, Line(s, DirectionFromOutwardNormal(n))};
  }
  return best;
}

std::string_view ToString(TangencyKind k) {
  switch (k) {
    case TangencyKind::kCenterContact: return "CenterContact";
    case TangencyKind::kTranslationIdentity: return "TranslationIdentity";
  }
  return "?";
}

std::string_view ToString(Dichotomy d) {
  return d == Dichotomy::kU0InU1 ? "U0InU1" : "U1InU0";
}

TangencyClass TangencyClassify(const ConvexBody& u0, const Map& m, Tolerance tol) {
  if (!IsEdgeFree(u0, tol)) throw Error(ErrorCode::kEdgeFreeRequired, "body has an edge");
  if (u0.is_singleton()) throw Error(ErrorCode::kPreconditionViolated, "body is a point");
  TangencyClass out;
  if (m.is_identity()) return out;
  const ConvexBody u1 = TransformBody(m, u0);
  const auto line = InternallyTangent(u0, u1, tol);
  if (!line) throw Error(ErrorCode::kPreconditionViolated, "bodies are not internally tangent");
  if (m.is_translation()) {
    throw Error(ErrorCode::kLemmaViolation, "tangent translate of an edge-free body");
  }
  const double scale = BodyScale(u0) + BodyScale(u1);
  const Point c = *m.center();
  const double slack = 1e-6 * scale;
  if (Dist(line->support, c) > slack || std::abs(SignedDepth(u0, c)) > slack) {
    throw Error(ErrorCode::kLemmaViolation, "contact point is not the center");
  }
  out.kind = TangencyKind::kCenterContact;
  out.center = c;
  out.u0_in_u1 = m.ratio() > 1;
  out.u1_in_u0 = m.ratio() < 1;
  const bool ok = out.u0_in_u1 ? Includes(u1, u0, tol) : Includes(u0, u1, tol);
  if (!ok) throw Error(ErrorCode::kLemmaViolation, "ratio does not decide inclusion");
  return out;
}

TangencyReport TangencyReportFor(const ConvexBody& u0, const Map& m, Tolerance tol) {
  TangencyReport rep;
  const ConvexBody u1 = TransformBody(m, u0);
  rep.edge_free = IsEdgeFree(u0, tol);
  rep.is_identity = m.is_identity();
  rep.common_line = InternallyTangent(u0, u1, tol);
  rep.internally_tangent = rep.common_line.has_value();
  const double on = std::max(tol.eps, 1e-12) * (BodyScale(u0) + BodyScale(u1));
  for (const Point& s : BoundarySamples(u0, 2048)) {
    if (std::abs(SignedDepth(u1, s)) <= on) rep.contact.push_back(s);
  }
  rep.u0_in_u1 = Includes(u1, u0, tol);
  rep.u1_in_u0 = Includes(u0, u1, tol);
  if (const auto c = m.center(); c && !rep.contact.empty()) {
    rep.contact_is_center = std::all_of(rep.contact.begin(), rep.contact.end(),
                                        [&](const Point& p) { return Dist(p, *c) <= 1e-3; });
  }
  rep.violates = rep.internally_tangent && !rep.is_identity &&
                 !(rep.contact_is_center && (rep.u0_in_u1 || rep.u1_in_u0));
  return rep;
}

Dichotomy TangencyInclusionDichotomy(const ConvexBody& u0, const Map& m, const Point& p0,
                                     double xi, Tolerance tol) {
  if (!(xi > 0 && xi <= 1)) throw Error(ErrorCode::kDegenerateRatio, "xi must lie in (0, 1]");
  if (!ContainsPoint(u0, p0, Containment::kClosed, tol)) {
    throw Error(ErrorCode::kPreconditionViolated, "p0 must lie in u0");
  }
  const ConvexBody u1 = TransformBody(m, u0);
  const ConvexBody v0 = TransformBody(Map::Homothety(p0, xi), u0);
  const ConvexBody v1 = TransformBody(Map::Homothety(m(p0), xi), u1);
  if (!InternallyTangent(v0, v1, tol)) {
    throw Error(ErrorCode::kPreconditionViolated, "shrunken bodies are not internally tangent");
  }
  if (Includes(u1, u0, tol) && Includes(v1, v0, tol)) return Dichotomy::kU0InU1;
  if (Includes(u0, u1, tol) && Includes(v0, v1, tol)) return Dichotomy::kU1InU0;
  throw Error(ErrorCode::kLemmaViolation, "neither inclusion pair holds");
}

// Shrinking -----------------------------------------------------------------

ShrinkFamily::ShrinkFamily(ConvexBody body, const Point& anchor, Tolerance tol)
    : body_(std::move(body)), anchor_(anchor) {
  if (!ContainsPoint(body_, anchor_, Containment::kClosed, tol)) {
    throw Error(ErrorCode::kPreconditionViolated, "anchor outside the body");
  }
}

ConvexBody ShrinkFamily::member(double xi) const {
  if (xi < 0) throw Error(ErrorCode::kDegenerateRatio, "negative shrink parameter");
  if (xi == 0) return ConvexBody::Singleton(anchor_);
  if (xi == 1) return body_;
  return TransformBody(Map::Homothety(anchor_, xi), body_);
}

ConvexBody CurvedTrapezoid(const ConvexBody& u0_xi, const Point& a0, const Point& a1) {
  return ConvexBody::HullOf(u0_xi, std::vector<Point>{a0, a1});
}

ShrinkResult MaxShrinkParameter(const ConvexBody& u0, const ConvexBody& u1, const Triangle& tri,
                                const Point& p0, const Point& p1, Tolerance tol) {
  const ShrinkFamily f0(u0, p0, tol), f1(u1, p1, tol);
  ShrinkResult res;
  auto search = [&](double xi) {
    ++res.evaluations;
    return WitnessSearch(f0.member(xi), f1.member(xi), tri, tol);
  };
  // A parameter of the order of eps would make every pair pass trivially.
  constexpr double kStart = 1e-6;
  const double start = std::max(tol.eps, kStart);
  std::vector<Witness> good = search(start);
  if (good.empty()) throw Error(ErrorCode::kNoInitialWitness, "no witness for tiny xi");
  double lo = start;
  if (auto w = search(1.0); !w.empty()) {
    lo = 1.0;
    good = std::move(w);
    res.reached_one = true;
  } else {
    double hi = 1.0;
    for (int it = 0; it < 50; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (auto w = search(mid); !w.empty()) {
        lo = mid;
        good = std::move(w);
      } else {
        hi = mid;
      }
    }
    for (int i = 1; i < 10; ++i) {
      const double xi = 0.1 * i;
      if (xi > lo + 1e-9 && !search(xi).empty()) res.non_interval = true;
    }
  }
  res.xi_max = lo;
  res.witnesses = good;
  res.witness = good.front();
  return res;
}

ShrinkResult MaxShrinkParameter(const ConvexBody& u0, const ConvexBody& u1, const Triangle& tri,
                                const Point& p0, const Map& m, Tolerance tol) {
  return MaxShrinkParameter(u0, u1, tri, p0, m(p0), tol);
}

// Edge-free approximation ---------------------------------------------------

CoveringDiskSequence::CoveringDiskSequence(const ConvexBody& u, double box_factor)
    : body_(u), center_(u.inner_point()) {
  const double r = u.covering_radius();
  box_ = box_factor * (r > 0 ? r : 1.0);
  disks_.push_back({center_, r > 0 ? r * 9.0 / 8.0 : 1.0 / 8.0});
}

void CoveringDiskSequence::next_level() {
  ++level_;
  const int half = 1 << level_;
  const double step = box_ / half;
  constexpr int kRadiusBits = 24;
  struct Item {
    double dist;
    int i, j;
  };
  std::vector<Item> items;
  for (int i = -half; i <= half; ++i) {
    for (int j = -half; j <= half; ++j) {
      if (level_ > 0 && i % 2 == 0 && j % 2 == 0) continue;  // seen on a coarser level
      items.push_back({std::hypot(i * step, j * step), i, j});
    }
  }
  // Far centers first: they hug the body most tightly.
  std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
    if (x.dist != y.dist) return x.dist > y.dist;
    return std::tie(x.i, x.j) < std::tie(y.i, y.j);
  });
  const double slack = 1e-12 * (1 + box_);
  for (const Item& it : items) {
    const Point g{center_.x + it.i * step, center_.y + it.j * step};
    double far = 0;
    for (const auto& pc : body_.profile().pieces) far = std::max(far, Dist(pc.a, g) + pc.r);
    const double r = std::ldexp(std::ceil(std::ldexp(far + slack, kRadiusBits)), -kRadiusBits);
    disks_.push_back({g, r});
  }
}

std::vector<Disk> CoveringDiskSequence::take(int n) {
  while (static_cast<int>(disks_.size()) < n) next_level();
  return {disks_.begin(), disks_.begin() + std::max(n, 0)};
}

ConvexBody EdgeFreeApprox(const ConvexBody& u, int n) {
  if (n < 1) throw Error(ErrorCode::kEmptyInput, "need at least one disk");
  CoveringDiskSequence seq(u);
  return ConvexBody::MakeDiskIntersection(seq.take(n));
}

// Crossing ------------------------------------------------------------------

namespace {

// Cyclic runs of samples not strictly inside `other` that reach strictly
// outside it.
int OutsideRuns(const ConvexBody& u, const ConvexBody& other, double eps, int n, bool* touched) {
  const std::vector<Point> s = BoundarySamples(u, n);
  std::vector<int> cls(s.size());  // 1 inside, 0 on, -1 outside
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double d = SignedDepth(other, s[i]);
    cls[i] = d > eps ? 1 : (d < -eps ? -1 : 0);
    if (cls[i] == 0) *touched = true;
  }
  const auto first_inside = std::find(cls.begin(), cls.end(), 1);
  if (first_inside == cls.end()) {
    return std::find(cls.begin(), cls.end(), -1) != cls.end() ? 1 : 0;
  }
  const std::size_t start = static_cast<std::size_t>(first_inside - cls.begin());
  int runs = 0;
  bool in_run = false, reaches_out = false;
  for (std::size_t k = 1; k <= cls.size(); ++k) {
    const int c = cls[(start + k) % cls.size()];
    if (c == 1) {
      if (in_run && reaches_out) ++runs;
      in_run = reaches_out = false;
    } else {
      in_run = true;
      reaches_out = reaches_out || c == -1;
    }
  }
  return runs;
}

}  // namespace

CrossingAnalysis AnalyzeCrossing(const ConvexBody& u0, const ConvexBody& u1, Tolerance tol,
                                 int samples) {
  const double eps = std::max(tol.eps, 1e-12) * (BodyScale(u0) + BodyScale(u1));
  CrossingAnalysis out;
  out.outside_runs_0 = OutsideRuns(u0, u1, eps, samples, &out.tangential);
  out.outside_runs_1 = OutsideRuns(u1, u0, eps, samples, &out.tangential);
  out.crossing = out.outside_runs_0 >= 2 && out.outside_runs_1 >= 2;
  return out;
}

bool FejesTothCrossing(const ConvexBody& u0, const ConvexBody& u1, Tolerance tol) {
  return AnalyzeCrossing(u0, u1, tol).crossing;
}

}  // namespace carousel
