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

#include "carousel/bodies.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "carousel/hull.hpp"

namespace carousel {
namespace {

constexpr double kPi = std::numbers::pi;
// Angular slack when deciding that a direction sits on a piece boundary.
constexpr double kAngleSlack = 1e-12;

double NormAngle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi) t = 0;
  return t;
}

double AngleOf(const Point& v) { return NormAngle(std::atan2(v.y, v.x)); }

// Piece k is active from `start` until the next item's start (cyclically).
struct CyclicItem {
  double start;
  Point a;
  double r;
};

SupportProfile FromCyclic(std::vector<CyclicItem> items) {
  SupportProfile out;
  if (items.size() == 1) {
    out.pieces.push_back({0, kTwoPi, items[0].a, items[0].r});
    return out;
  }
  for (auto& it : items) it.start = NormAngle(it.start);
  std::stable_sort(items.begin(), items.end(),
                   [](const CyclicItem& x, const CyclicItem& y) { return x.start < y.start; });
  const CyclicItem& wrap = items.back();
  auto push = [&](double lo, double hi, const Point& a, double r) {
    if (hi <= lo) return;
    if (!out.pieces.empty() && out.pieces.back().a == a && out.pieces.back().r == r) {
      out.pieces.back().hi = hi;
      return;
    }
    out.pieces.push_back({lo, hi, a, r});
  };
  push(0, items[0].start, wrap.a, wrap.r);
  for (std::size_t k = 0; k < items.size(); ++k) {
    const double hi = k + 1 < items.size() ? items[k + 1].start : kTwoPi;
    push(items[k].start, hi, items[k].a, items[k].r);
  }
  if (out.pieces.empty()) out.pieces.push_back({0, kTwoPi, items[0].a, items[0].r});
  out.pieces.front().lo = 0;
  out.pieces.back().hi = kTwoPi;
  return out;
}

SupportProfile PolygonProfile(const std::vector<Point>& v) {
  if (v.size() == 1) return SupportProfile::OfPoint(v[0]);
  std::vector<CyclicItem> items;
  const std::size_t m = v.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Point& p = v[k];
    const Point& q = v[(k + 1) % m];
    items.push_back({AngleOf(PerpRight(q - p)), q, 0.0});
  }
  return FromCyclic(std::move(items));
}

SupportProfile DiskProfile(const Disk& d) {
  SupportProfile out;
  out.pieces.push_back({0, kTwoPi, d.center, d.radius});
  return out;
}

using Intervals = std::vector<std::pair<double, double>>;

Intervals Intersect(const Intervals& x, const Intervals& y) {
  Intervals out;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const double lo = std::max(x[i].first, y[j].first);
    const double hi = std::min(x[i].second, y[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (x[i].second < y[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return out;
}

// Angles on circle i that lie in disk j.
Intervals AllowedOn(const Disk& di, const Disk& dj) {
  const Point d = di.center - dj.center;
  const double dist = Norm(d);
  if (dist == 0) {
    if (di.radius <= dj.radius) return {{0, kTwoPi}};
    return {};
  }
  // Half-width from the factored form of the triangle (ri, rj, dist) so
  // that nearly tangent circles keep their tiny arcs.
  const double ri = di.radius, rj = dj.radius;
  const double f1 = rj - ri + dist, f2 = rj + ri - dist, f3 = ri + dist - rj;
  if (f3 <= 0) return {{0, kTwoPi}};
  if (f1 < 0 || f2 < 0) return {};
  const double psi = AngleOf(-d);
  const double w = std::atan2(std::sqrt(f1 * f2 * f3 * (ri + rj + dist)),
                              ri * ri + dist * dist - rj * rj);
  const double s = NormAngle(psi - w);
  const double e = s + 2 * w;
  if (e <= kTwoPi) return {{s, e}};
  return {{0, e - kTwoPi}, {s, kTwoPi}};
}

std::vector<Arc> ComputeArcs(const std::vector<Disk>& disks) {
  std::vector<Arc> arcs;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    Intervals allowed{{0, kTwoPi}};
    for (std::size_t j = 0; j < disks.size() && !allowed.empty(); ++j) {
      if (j == i) continue;
      allowed = Intersect(allowed, AllowedOn(disks[i], disks[j]));
    }
    if (allowed.empty()) continue;
    // Rejoin the piece that wraps through angle 0.
    if (allowed.size() >= 2 && allowed.front().first == 0 && allowed.back().second == kTwoPi) {
      allowed.back().second = kTwoPi + allowed.front().second;
      allowed.erase(allowed.begin());
    }
    for (const auto& [lo, hi] : allowed) {
      // A circle touching the region in one point adds nothing to its
      // support function and would split a neighbouring arc.
      if (hi - lo <= 1e-12) continue;
      arcs.push_back({static_cast<int>(i), lo, hi});
    }
  }
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.lo < y.lo; });
  return arcs;
}

SupportProfile DiskIntersectionProfile(const DiskIntersection& di) {
  for (const Arc& arc : di.arcs) {
    if (arc.hi - arc.lo >= kTwoPi - 1e-12) return DiskProfile(di.disks[arc.disk]);
  }
  std::vector<CyclicItem> items;
  for (const Arc& arc : di.arcs) {
    const Disk& d = di.disks[arc.disk];
    items.push_back({arc.lo, d.center, d.radius});
    items.push_back({arc.hi, d.center + d.radius * UnitAt(arc.hi), 0.0});
  }
  // A corner and the following arc may share a start angle; the arc must win
  // so the corner collapses to an empty piece.
  for (auto& it : items) it.start = NormAngle(it.start);
  std::stable_sort(items.begin(), items.end(), [](const CyclicItem& x, const CyclicItem& y) {
    if (x.start != y.start) return x.start < y.start;
    return x.r < y.r;
  });
  return FromCyclic(std::move(items));
}

SupportProfile CurvedProfile(const CurvedPiece& c) {
  if (const auto* d = std::get_if<Disk>(&c)) return DiskProfile(*d);
  return DiskIntersectionProfile(std::get<DiskIntersection>(c));
}

// Upper envelope of several support profiles.
SupportProfile Envelope(const std::vector<SupportProfile>& parts) {
  if (parts.size() == 1) return parts[0];
  std::vector<double> cuts{0, kTwoPi};
  for (const auto& pr : parts) {
    for (const auto& pc : pr.pieces) {
      cuts.push_back(pc.lo);
      cuts.push_back(pc.hi);
    }
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for (const auto& p : parts[i].pieces) {
        for (const auto& q : parts[j].pieces) {
          const double lo = std::max(p.lo, q.lo), hi = std::min(p.hi, q.hi);
          if (lo > hi) continue;
          const Point a = p.a - q.a;
          const double na = Norm(a);
          if (na == 0) continue;
          const double c = (q.r - p.r) / na;
          if (std::abs(c) > 1) continue;
          const double phi = std::atan2(a.y, a.x);
          const double delta = std::acos(c);
          for (double t : {NormAngle(phi + delta), NormAngle(phi - delta)}) {
            if (t >= lo && t <= hi) cuts.push_back(t);
          }
        }
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  SupportProfile out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    if (hi <= lo) continue;
    const double mid = 0.5 * (lo + hi);
    const SupportPiece* best = nullptr;
    double best_value = -std::numeric_limits<double>::infinity();
    for (const auto& pr : parts) {
      const SupportPiece& pc = pr.pieces[pr.locate(mid)];
      const double v = Dot(UnitAt(mid), pc.a) + pc.r;
      if (v > best_value) {
        best_value = v;
        best = &pc;
      }
    }
    if (!out.pieces.empty() && out.pieces.back().a == best->a && out.pieces.back().r == best->r) {
      out.pieces.back().hi = hi;
    } else {
      out.pieces.push_back({lo, hi, best->a, best->r});
    }
  }
  out.pieces.front().lo = 0;
  out.pieces.back().hi = kTwoPi;
  return out;
}

SupportProfile HullProfile(const HullOfUnion& h) {
  std::vector<SupportProfile> parts;
  for (const auto& b : h.bases) parts.push_back(CurvedProfile(b));
  if (!h.extra.empty()) parts.push_back(PolygonProfile(h.extra));
  return Envelope(parts);
}

// Scale used to turn relative slacks into absolute ones.
double ProfileScale(const SupportProfile& pr) {
  double s = 1;
  for (const auto& pc : pr.pieces) s = std::max(s, std::abs(pc.a.x) + std::abs(pc.a.y) + pc.r);
  return s;
}

template <bool kMin>
Extremum SupportGap(const SupportProfile& a, const SupportProfile& b) {
  Extremum best{kMin ? std::numeric_limits<double>::infinity()
                     : -std::numeric_limits<double>::infinity(),
                0};
  auto consider = [&](double t, const Point& d, double c) {
    const double v = Dot(UnitAt(t), d) + c;
    if (kMin ? v < best.value : v > best.value) best = {v, t};
  };
  std::size_t i = 0, j = 0;
  double cur = 0;
  while (i < a.pieces.size() && j < b.pieces.size()) {
    const SupportPiece& p = a.pieces[i];
    const SupportPiece& q = b.pieces[j];
    const double hi = std::min(p.hi, q.hi);
    const Point d = p.a - q.a;
    const double c = p.r - q.r;
    consider(cur, d, c);
    consider(hi, d, c);
    if (d.x != 0 || d.y != 0) {
      const double t = kMin ? AngleOf(-d) : AngleOf(d);
      if (t > cur && t < hi) consider(t, d, c);
    }
    cur = hi;
    if (p.hi <= hi) ++i;
    if (q.hi <= hi) ++j;
  }
  best.theta = NormAngle(best.theta);
  return best;
}

struct Candidate {
  Point x;
  double value;
};

// Support points of the pieces touching direction theta.
std::vector<Point> SupportCandidates(const SupportProfile& pr, double theta) {
  const std::size_t n = pr.pieces.size();
  const std::size_t k = pr.locate(theta);
  std::vector<std::size_t> idx{k};
  if (theta - pr.pieces[k].lo <= kAngleSlack) idx.push_back((k + n - 1) % n);
  if (pr.pieces[k].hi - theta <= kAngleSlack) idx.push_back((k + 1) % n);
  if (theta <= kAngleSlack) idx.push_back(n - 1);
  if (kTwoPi - theta <= kAngleSlack) idx.push_back(0);
  const Point u = UnitAt(theta);
  std::vector<Candidate> cands;
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i : idx) {
    const SupportPiece& pc = pr.pieces[i];
    const Point x = pc.a + pc.r * u;
    const double v = Dot(u, x);
    cands.push_back({x, v});
    best = std::max(best, v);
  }
  const double slack = 1e-12 * ProfileScale(pr);
  std::vector<Point> out;
  for (const auto& c : cands) {
    if (c.value >= best - slack) out.push_back(c.x);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double EdgeSlack(const SupportProfile& pr, Tolerance tol) {
  return std::max(tol.eps, 1e-12) * ProfileScale(pr);
}

bool AngleWithin(double t, double lo, double hi) {
  // lo <= hi, both inside [0, 2pi]; t normalized.
  if (t >= lo - kAngleSlack && t <= hi + kAngleSlack) return true;
  if (t + kTwoPi <= hi + kAngleSlack) return true;
  return t - kTwoPi >= lo - kAngleSlack;
}

}  // namespace

std::string_view ToString(BodyKind k) {
  switch (k) {
    case BodyKind::kPolygon: return "polygon";
    case BodyKind::kDisk: return "disk";
    case BodyKind::kDiskIntersection: return "disk_intersection";
    case BodyKind::kHullOfUnion: return "hull_of_union";
  }
  return "?";
}

SupportProfile SupportProfile::OfPoint(const Point& p) {
  SupportProfile out;
  out.pieces.push_back({0, kTwoPi, p, 0});
  return out;
}

std::size_t SupportProfile::locate(double theta) const {
  auto it = std::lower_bound(pieces.begin(), pieces.end(), theta,
                             [](const SupportPiece& pc, double t) { return pc.hi < t; });
  if (it == pieces.end()) return pieces.size() - 1;
  return static_cast<std::size_t>(it - pieces.begin());
}

double SupportProfile::value(double theta) const {
  theta = NormAngle(theta);
  const SupportPiece& pc = pieces[locate(theta)];
  return Dot(UnitAt(theta), pc.a) + pc.r;
}

ConvexBody::ConvexBody(Rep rep, SupportProfile profile)
    : rep_(std::move(rep)),
      profile_(std::make_shared<const SupportProfile>(std::move(profile))) {}

ConvexBody ConvexBody::MakePolygon(std::span<const Point> points) {
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorCode::kPreconditionViolated, "non-finite coordinate");
    }
  }
  Polygon poly{ConvexHullVertices(points)};
  SupportProfile pr = PolygonProfile(poly.vertices);
  return ConvexBody(std::move(poly), std::move(pr));
}

ConvexBody ConvexBody::Singleton(const Point& p) {
  return MakePolygon(std::span<const Point>(&p, 1));
}

ConvexBody ConvexBody::MakeDisk(const Point& center, double radius) {
  if (!(radius >= 0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kBadRadius, "disk radius must be >= 0");
  }
  if (radius == 0) return Singleton(center);
  Disk d{center, radius};
  return ConvexBody(d, DiskProfile(d));
}

ConvexBody ConvexBody::MakeDiskIntersection(std::vector<Disk> disks) {
  if (disks.empty()) throw Error(ErrorCode::kEmptyInput, "disk intersection of no disks");
  for (const auto& d : disks) {
    if (!(d.radius > 0)) throw Error(ErrorCode::kBadRadius, "intersection disks need r > 0");
  }
  std::vector<Disk> uniq;
  for (const auto& d : disks) {
    const bool seen = std::any_of(uniq.begin(), uniq.end(), [&](const Disk& e) {
      return e.center == d.center && e.radius == d.radius;
    });
    if (!seen) uniq.push_back(d);
  }
  DiskIntersection di{std::move(uniq), {}};
  di.arcs = ComputeArcs(di.disks);
  if (di.arcs.empty()) {
    // Externally tangent disks can still share exactly one point.
    for (std::size_t i = 0; i < di.disks.size(); ++i) {
      for (std::size_t j = i + 1; j < di.disks.size(); ++j) {
        const Disk& a = di.disks[i];
        const Disk& b = di.disks[j];
        const double gap = Dist(a.center, b.center) - a.radius - b.radius;
        if (std::abs(gap) > 1e-12 * (1 + a.radius + b.radius)) continue;
        const Point p = a.center + a.radius * Normalized(b.center - a.center);
        const bool common = std::all_of(di.disks.begin(), di.disks.end(), [&](const Disk& d) {
          return Dist(p, d.center) <= d.radius * (1 + 1e-12);
        });
        if (common) return Singleton(p);
      }
    }
    throw Error(ErrorCode::kEmptyIntersection, "disks have no common point");
  }
  SupportProfile pr = DiskIntersectionProfile(di);
  return ConvexBody(std::move(di), std::move(pr));
}

ConvexBody ConvexBody::HullOfBodies(std::span<const ConvexBody> parts) {
  std::vector<CurvedPiece> bases;
  std::vector<Point> extra;
  for (const auto& part : parts) {
    std::visit(
        [&](const auto& r) {
          using R = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<R, Polygon>) {
            extra.insert(extra.end(), r.vertices.begin(), r.vertices.end());
          } else if constexpr (std::is_same_v<R, HullOfUnion>) {
            bases.insert(bases.end(), r.bases.begin(), r.bases.end());
            extra.insert(extra.end(), r.extra.begin(), r.extra.end());
          } else {
            bases.emplace_back(r);
          }
        },
        part.rep());
  }
  if (bases.empty() && extra.empty()) throw Error(ErrorCode::kEmptyInput, "hull of nothing");
  if (bases.empty()) return MakePolygon(extra);
  if (!extra.empty()) extra = ConvexHullVertices(extra);
  if (bases.size() == 1 && extra.empty()) {
    if (const auto* d = std::get_if<Disk>(&bases[0])) return MakeDisk(d->center, d->radius);
    return MakeDiskIntersection(std::get<DiskIntersection>(bases[0]).disks);
  }
  HullOfUnion h{std::move(bases), std::move(extra)};
  SupportProfile pr = HullProfile(h);
  return ConvexBody(std::move(h), std::move(pr));
}

ConvexBody ConvexBody::HullOf(const ConvexBody& u, std::span<const Point> extra) {
  if (extra.empty()) return u;
  std::vector<ConvexBody> parts{u, MakePolygon(extra)};
  return HullOfBodies(parts);
}

bool ConvexBody::is_singleton() const {
  const auto* poly = std::get_if<Polygon>(&rep_);
  return poly != nullptr && poly->vertices.size() == 1;
}

Point ConvexBody::inner_point() const {
  if (const auto* d = std::get_if<Disk>(&rep_)) return d->center;
  if (const auto* poly = std::get_if<Polygon>(&rep_)) {
    Point s{0, 0};
    for (const auto& v : poly->vertices) s += v;
    return s / static_cast<double>(poly->vertices.size());
  }
  Point s{0, 0};
  constexpr int kDirs = 8;
  for (int i = 0; i < kDirs; ++i) s += SupportPoint(*this, UnitAt(kTwoPi * i / kDirs));
  return s / static_cast<double>(kDirs);
}

double ConvexBody::covering_radius() const {
  const Point c = inner_point();
  double r = 0;
  for (const auto& pc : profile_->pieces) r = std::max(r, Dist(pc.a, c) + pc.r);
  return r;
}

Triangle::Triangle(Point p0, Point p1, Point p2) : a0(p0), a1(p1), a2(p2) {
  if (Orient2d(a0, a1, a2) <= 0) {
    throw Error(ErrorCode::kPreconditionViolated, "triangle must be counterclockwise");
  }
}

ConvexBody Triangle::body() const { return ConvexBody::MakePolygon({a0, a1, a2}); }

double SupportValue(const ConvexBody& u, const Point& normal) {
  return u.profile().value(AngleOf(normal)) * Norm(normal);
}

Point SupportPoint(const ConvexBody& u, const Point& normal) {
  return SupportCandidates(u.profile(), AngleOf(normal)).front();
}

std::pair<Point, Point> SupportSet(const ConvexBody& u, const Point& normal) {
  const auto c = SupportCandidates(u.profile(), AngleOf(normal));
  return {c.front(), c.back()};
}

Extremum MinSupportGap(const SupportProfile& a, const SupportProfile& b) {
  return SupportGap<true>(a, b);
}

Extremum MaxSupportGap(const SupportProfile& a, const SupportProfile& b) {
  return SupportGap<false>(a, b);
}

double SignedDepth(const ConvexBody& u, const Point& p) {
  return MinSupportGap(u.profile(), SupportProfile::OfPoint(p)).value;
}

double DistanceToBody(const ConvexBody& u, const Point& p) {
  return std::max(0.0, -SignedDepth(u, p));
}

Point ClosestPoint(const ConvexBody& u, const Point& p) {
  const Extremum e = MinSupportGap(u.profile(), SupportProfile::OfPoint(p));
  if (e.value >= 0) return p;
  const auto c = SupportCandidates(u.profile(), e.theta);
  return ClosestOnSegment(c.front(), c.back(), p);
}

bool ContainsPoint(const ConvexBody& u, const Point& p, Containment mode, Tolerance tol) {
  if (tol.eps == 0) {
    if (const auto* poly = std::get_if<Polygon>(&u.rep())) {
      const std::span<const Point> v(poly->vertices);
      return mode == Containment::kClosed ? HullContains(v, p) : HullStrictlyContains(v, p);
    }
  }
  const double depth = SignedDepth(u, p);
  return mode == Containment::kClosed ? depth >= -tol.eps : depth > tol.eps;
}

double InclusionMargin(const ConvexBody& a, const ConvexBody& b) {
  return MinSupportGap(a.profile(), b.profile()).value;
}

InclusionReport CheckInclusion(const ConvexBody& a, const ConvexBody& b, Tolerance tol) {
  const Extremum e = MinSupportGap(a.profile(), b.profile());
  InclusionReport r;
  r.margin = e.value;
  r.witness = SupportPoint(b, UnitAt(e.theta));
  const auto* pa = std::get_if<Polygon>(&a.rep());
  const auto* pb = std::get_if<Polygon>(&b.rep());
  if (tol.eps == 0 && pa != nullptr && pb != nullptr) {
    r.included = std::all_of(pb->vertices.begin(), pb->vertices.end(), [&](const Point& v) {
      return HullContains(std::span<const Point>(pa->vertices), v);
    });
  } else {
    r.included = e.value >= -tol.eps;
  }
  return r;
}

bool Includes(const ConvexBody& a, const ConvexBody& b, Tolerance tol) {
  return CheckInclusion(a, b, tol).included;
}

bool LooselyIncludes(const ConvexBody& a, const ConvexBody& b, Tolerance tol) {
  const auto* pa = std::get_if<Polygon>(&a.rep());
  const auto* pb = std::get_if<Polygon>(&b.rep());
  if (tol.eps == 0 && pa != nullptr && pb != nullptr) {
    return std::all_of(pb->vertices.begin(), pb->vertices.end(), [&](const Point& v) {
      return HullStrictlyContains(std::span<const Point>(pa->vertices), v);
    });
  }
  return InclusionMargin(a, b) > tol.eps;
}

double Abundance(const ConvexBody& u, const ConvexBody& v, Tolerance tol) {
  if (!Includes(v, u, tol)) {
    throw Error(ErrorCode::kPreconditionViolated, "abundance needs u inside v");
  }
  return std::max(0.0, MaxSupportGap(v.profile(), u.profile()).value);
}

OpenExtension::OpenExtension(ConvexBody u, double d) : body_(std::move(u)), d_(d) {
  if (!(d > 0)) throw Error(ErrorCode::kBadRadius, "open extension radius must be > 0");
}

PointedSupportLine SupportingLine(const ConvexBody& u, const Direction<double>& d) {
  const Point s = SupportPoint(u, d.outward_normal());
  return {s, Line(s, d)};
}

PointedSupportLine SeparatingSupportLine(const ConvexBody& u, const Point& p, Tolerance tol) {
  const Extremum e = MinSupportGap(u.profile(), SupportProfile::OfPoint(p));
  if (e.value >= -tol.eps) {
    throw Error(ErrorCode::kNotSeparable, "point is not outside the body");
  }
  // The offset from the nearest point is the exact outward normal there.
  const Point s = ClosestPoint(u, p);
  return {s, Line(s, DirectionFromOutwardNormal(p - s))};
}

TangentPair TangentsFromExternalPoint(const ConvexBody& u, const Point& f, Tolerance tol) {
  if (u.is_singleton()) throw Error(ErrorCode::kDegenerateNucleus, "singleton nucleus");
  const SupportProfile& pr = u.profile();
  const Extremum e = MinSupportGap(pr, SupportProfile::OfPoint(f));
  if (e.value >= -tol.eps) throw Error(ErrorCode::kNotExternal, "focus is not outside the body");
  auto g = [&](double t) { return pr.value(t) - Dot(UnitAt(t), f); };
  // g < 0 exactly on the separating directions, an arc around e.theta
  // shorter than pi; bisect for its two ends.
  auto root = [&](double sign) {
    double in = e.theta, out = e.theta + sign * kPi;
    for (int it = 0; it < 200 && std::abs(out - in) > 1e-16; ++it) {
      const double mid = 0.5 * (in + out);
      if (g(mid) < 0) {
        in = mid;
      } else {
        out = mid;
      }
    }
    return NormAngle(out);
  };
  std::vector<PointedSupportLine> lines;
  for (double sign : {1.0, -1.0}) {
    const Point n = UnitAt(root(sign));
    const Point t = SupportPoint(u, n);
    lines.push_back({t, Line(t, DirectionFromOutwardNormal(n))});
  }
  if (Dot(lines[0].line.dir.vec(), lines[0].support - f) > 0) return {lines[0], lines[1]};
  return {lines[1], lines[0]};
}

LineBoundaryHit LineBoundaryIntersections(const ConvexBody& u, const Line& l, Tolerance tol) {
  const SupportProfile& pr = u.profile();
  const double eps = std::max(tol.eps, 1e-12);
  const Point dir = Normalized(l.dir.vec());
  LineBoundaryHit hit;
  std::vector<Point> pts;
  const std::size_t n = pr.pieces.size();
  for (std::size_t k = 0; k < n; ++k) {
    const SupportPiece& pc = pr.pieces[k];
    if (pc.r == 0) {
      if (std::abs(SignedDistance(l, pc.a)) <= eps) pts.push_back(pc.a);
    } else {
      // Line against the circle, kept when the hit lies on this arc.
      const double s = Dot(pc.a - l.anchor, dir);
      const Point foot = l.anchor + s * dir;
      const double off = Dist(foot, pc.a);
      std::vector<Point> cand;
      if (std::abs(off - pc.r) <= eps) {
        cand.push_back(foot);
      } else if (off < pc.r) {
        const double half = std::sqrt(pc.r * pc.r - off * off);
        cand.push_back(foot - half * dir);
        cand.push_back(foot + half * dir);
      }
      for (const auto& x : cand) {
        if (AngleWithin(AngleOf(x - pc.a), pc.lo, pc.hi)) pts.push_back(x);
      }
    }
    // Flat edge to the next piece.
    const Point e0 = pc.end();
    const Point e1 = pr.pieces[(k + 1) % n].start();
    if (Dist(e0, e1) <= EdgeSlack(pr, tol)) continue;
    const double s0 = SignedDistance(l, e0), s1 = SignedDistance(l, e1);
    if (std::abs(s0) <= eps && std::abs(s1) <= eps) {
      hit.segment = true;
      hit.points = {std::min(e0, e1), std::max(e0, e1)};
      return hit;
    }
    if ((s0 < 0) != (s1 < 0) || s0 == 0 || s1 == 0) {
      const double t = s0 / (s0 - s1);
      pts.push_back(e0 + t * (e1 - e0));
    }
  }
  std::sort(pts.begin(), pts.end(),
            [&](const Point& x, const Point& y) { return Dot(x, dir) < Dot(y, dir); });
  const double merge = std::max(1e3 * eps, 1e-9) * ProfileScale(pr);
  for (const auto& p : pts) {
    if (hit.points.empty() || Dist(hit.points.back(), p) > merge) hit.points.push_back(p);
  }
  if (hit.points.size() > 2) {
    // Only round-off can produce a third point on a convex boundary.
    hit.points = {hit.points.front(), hit.points.back()};
  }
  return hit;
}

bool IsEdgeFree(const ConvexBody& u, Tolerance tol) {
  const SupportProfile& pr = u.profile();
  const std::size_t n = pr.pieces.size();
  const double slack = std::max(EdgeSlack(pr, tol), 1e-9 * ProfileScale(pr));
  for (std::size_t k = 0; k < n; ++k) {
    if (Dist(pr.pieces[k].end(), pr.pieces[(k + 1) % n].start()) > slack) return false;
  }
  return true;
}

std::vector<Point> BoundarySamples(const ConvexBody& u, int n) {
  const SupportProfile& pr = u.profile();
  struct Element {
    bool arc;
    const SupportPiece* pc;
    Point p0, p1;
    double len;
  };
  std::vector<Element> elems;
  double total = 0;
  const std::size_t m = pr.pieces.size();
  for (std::size_t k = 0; k < m; ++k) {
    const SupportPiece& pc = pr.pieces[k];
    if (pc.r > 0) {
      elems.push_back({true, &pc, {}, {}, pc.r * (pc.hi - pc.lo)});
      total += elems.back().len;
    }
    const Point e0 = pc.end(), e1 = pr.pieces[(k + 1) % m].start();
    const double len = Dist(e0, e1);
    if (len > 0) {
      elems.push_back({false, &pc, e0, e1, len});
      total += len;
    }
  }
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(std::max(n, 0)));
  if (total == 0) {
    out.assign(static_cast<std::size_t>(std::max(n, 0)), pr.pieces[0].a);
    return out;
  }
  std::size_t e = 0;
  double acc = 0;
  for (int i = 0; i < n; ++i) {
    const double s = total * i / n;
    while (e + 1 < elems.size() && acc + elems[e].len < s) acc += elems[e++].len;
    const Element& el = elems[e];
    const double f = std::clamp((s - acc) / el.len, 0.0, 1.0);
    if (el.arc) {
      const double t = el.pc->lo + f * (el.pc->hi - el.pc->lo);
      out.push_back(el.pc->a + el.pc->r * UnitAt(t));
    } else {
      out.push_back(el.p0 + f * (el.p1 - el.p0));
    }
  }
  return out;
}

namespace {

template <class F>
ConvexBody MapBody(const ConvexBody& u, F&& point, double scale) {
  auto map_disk = [&](const Disk& d) { return Disk{point(d.center), d.radius * scale}; };
  auto map_curved = [&](const CurvedPiece& c) -> CurvedPiece {
    if (const auto* d = std::get_if<Disk>(&c)) return map_disk(*d);
    const auto& di = std::get<DiskIntersection>(c);
    std::vector<Disk> ds;
    for (const auto& d : di.disks) ds.push_back(map_disk(d));
    return std::get<DiskIntersection>(ConvexBody::MakeDiskIntersection(ds).rep());
  };
  return std::visit(
      [&](const auto& r) -> ConvexBody {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, Polygon>) {
          std::vector<Point> v;
          for (const auto& p : r.vertices) v.push_back(point(p));
          return ConvexBody::MakePolygon(v);
        } else if constexpr (std::is_same_v<R, Disk>) {
          const Disk d = map_disk(r);
          return ConvexBody::MakeDisk(d.center, d.radius);
        } else if constexpr (std::is_same_v<R, DiskIntersection>) {
          std::vector<Disk> ds;
          for (const auto& d : r.disks) ds.push_back(map_disk(d));
          return ConvexBody::MakeDiskIntersection(ds);
        } else {
          std::vector<ConvexBody> parts;
          for (const auto& b : r.bases) {
            const CurvedPiece c = map_curved(b);
            if (const auto* d = std::get_if<Disk>(&c)) {
              parts.push_back(ConvexBody::MakeDisk(d->center, d->radius));
            } else {
              parts.push_back(ConvexBody::MakeDiskIntersection(std::get<DiskIntersection>(c).disks));
            }
          }
          std::vector<Point> v;
          for (const auto& p : r.extra) v.push_back(point(p));
          if (!v.empty()) parts.push_back(ConvexBody::MakePolygon(v));
          return ConvexBody::HullOfBodies(parts);
        }
      },
      u.rep());
}

}  // namespace

ConvexBody TransformBody(const Map& m, const ConvexBody& u) {
  return MapBody(u, [&](const Point& p) { return m(p); }, m.ratio());
}

ConvexBody TransformBody(const RigidMotion& m, const ConvexBody& u) {
  return MapBody(u, [&](const Point& p) { return m(p); }, 1.0);
}

namespace {

struct Tagged {
  Point p;
  int tag;
};

// Closest point of conv(simplex) to q, as weights on the simplex points.
std::vector<double> ClosestWeights(const std::vector<Tagged>& s, const Point& q) {
  auto segment = [&](const Point& a, const Point& b) {
    const Point ab = b - a;
    const double len2 = SquaredNorm(ab);
    const double t = len2 == 0 ? 0.0 : std::clamp(Dot(q - a, ab) / len2, 0.0, 1.0);
    return t;
  };
  if (s.size() == 1) return {1.0};
  if (s.size() == 2) {
    const double t = segment(s[0].p, s[1].p);
    return {1 - t, t};
  }
  const Point a = s[0].p, b = s[1].p, c = s[2].p;
  const double area = Cross(b - a, c - a);
  if (area != 0) {
    const double wa = Cross(b - q, c - q) / area;
    const double wb = Cross(c - q, a - q) / area;
    const double wc = 1 - wa - wb;
    if (wa >= 0 && wb >= 0 && wc >= 0) return {wa, wb, wc};
  }
  std::vector<double> best;
  double best_d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const double t = segment(s[i].p, s[j].p);
    const Point x = s[i].p + t * (s[j].p - s[i].p);
    const double d = SquaredDistance(x, q);
    if (d < best_d) {
      best_d = d;
      best.assign(3, 0.0);
      best[i] = 1 - t;
      best[j] = t;
    }
  }
  return best;
}

}  // namespace

BarycentricDecomposition CaratheodoryDecompose(const Point& p, const ConvexBody& u,
                                               const Point& a1, const Point& a2,
                                               Tolerance tol) {
  if (SignedDepth(u, p) >= 0) return {1, 0, 0, p};
  auto support = [&](const Point& dir) {
    Tagged best{SupportPoint(u, dir), 0};
    if (Dot(dir, a1) > Dot(dir, best.p)) best = {a1, 1};
    if (Dot(dir, a2) > Dot(dir, best.p)) best = {a2, 2};
    return best;
  };
  const double scale =
      std::max({1.0, u.covering_radius() + Norm(u.inner_point()), Norm(a1), Norm(a2), Norm(p)});
  std::vector<Tagged> simplex{{ClosestPoint(u, p), 0}};
  std::vector<double> w{1.0};
  Point q = simplex[0].p;
  for (int iter = 0; iter < 100; ++iter) {
    w = ClosestWeights(simplex, p);
    std::vector<Tagged> keep;
    std::vector<double> keep_w;
    q = Point{0, 0};
    for (std::size_t i = 0; i < simplex.size(); ++i) {
      if (w[i] > 0) {
        keep.push_back(simplex[i]);
        keep_w.push_back(w[i]);
        q += w[i] * simplex[i].p;
      }
    }
    simplex = std::move(keep);
    w = std::move(keep_w);
    const Point v = p - q;
    const double nv = Norm(v);
    if (nv <= 1e-14 * scale || simplex.size() == 3) break;
    const Tagged s = support(v);
    if (Dot(v, s.p - q) <= 1e-14 * scale * nv) break;
    simplex.push_back(s);
  }
  if (Dist(p, q) > std::max(tol.eps, 1e-12 * scale)) {
    throw Error(ErrorCode::kPreconditionViolated, "point outside conv(u, a1, a2)");
  }
  BarycentricDecomposition out;
  Point x{0, 0};
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (simplex[i].tag == 0) {
      out.l0 += w[i];
      x += w[i] * simplex[i].p;
    } else if (simplex[i].tag == 1) {
      out.l1 += w[i];
    } else {
      out.l2 += w[i];
    }
  }
  out.x = out.l0 > 0 ? x / out.l0 : u.inner_point();
  return out;
}

}  // namespace carousel
