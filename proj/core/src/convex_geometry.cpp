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

#include "carousel/convex_geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "carousel/hull.hpp"
#include "carousel/rng.hpp"

namespace carousel {
namespace {

std::vector<std::string> DefaultLabels(int n, std::vector<std::string> given, char prefix) {
  if (!given.empty()) {
    if (static_cast<int>(given.size()) != n) {
      throw Error(ErrorCode::kPreconditionViolated, "label count differs from ground size");
    }
    std::vector<std::string> sorted = given;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw Error(ErrorCode::kPreconditionViolated, "labels must be unique");
    }
    return given;
  }
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

bool Has(Mask x, int i) { return (x >> i) & 1U; }

}  // namespace

ClosureSystem::ClosureSystem(int n, Operator op, std::vector<std::string> labels) : n_(n) {
  if (n < 0 || n > kMaxGround) {
    throw Error(ErrorCode::kSizeLimit, "ground set larger than " + std::to_string(kMaxGround));
  }
  labels_ = DefaultLabels(n, std::move(labels), 'e');
  state_ = std::make_shared<State>();
  state_->op = std::move(op);
  state_->memo.assign(std::size_t{1} << n, 0);
  state_->known.assign(std::size_t{1} << n, false);
}

ClosureSystem ClosureSystem::FromTable(int n, std::vector<Mask> table,
                                       std::vector<std::string> labels) {
  if (n < 0 || n > kMaxGround) {
    throw Error(ErrorCode::kSizeLimit, "ground set larger than " + std::to_string(kMaxGround));
  }
  if (table.size() != (std::size_t{1} << n)) {
    throw Error(ErrorCode::kPreconditionViolated, "table must list every subset");
  }
  auto shared = std::make_shared<std::vector<Mask>>(std::move(table));
  return ClosureSystem(
      n, [shared](Mask x, bool&) { return (*shared)[x]; }, std::move(labels));
}

Mask ClosureSystem::operator()(Mask x) const {
  x &= full();
  State& s = *state_;
  if (!s.known[x]) {
    bool borderline = false;
    s.memo[x] = s.op(x, borderline) & full();
    s.known[x] = true;
    s.borderline = s.borderline || borderline;
  }
  return s.memo[x];
}

std::vector<Mask> ClosureSystem::closed_sets() const {
  std::vector<Mask> out;
  for (Mask x = 0; x <= full(); ++x) {
    if (is_closed(x)) out.push_back(x);
    if (x == full()) break;
  }
  return out;
}

std::string_view ToString(Axiom a) {
  switch (a) {
    case Axiom::kExtensive: return "extensive";
    case Axiom::kMonotone: return "monotone";
    case Axiom::kIdempotent: return "idempotent";
  }
  return "?";
}

AxiomReport VerifyClosureAxioms(const ClosureSystem& cs) {
  AxiomReport rep;
  rep.empty_closed = cs(0) == 0;
  auto fail = [&](Axiom a, Mask x, Mask y) {
    rep.ok = false;
    rep.violation = AxiomViolation{a, x, y};
    return rep;
  };
  const Mask full = cs.full();
  for (Mask x = 0;; ++x) {
    const Mask cx = cs(x);
    if ((cx & x) != x) return fail(Axiom::kExtensive, x, x);
    if (cs(cx) != cx) return fail(Axiom::kIdempotent, x, x);
    for (int e = 0; e < cs.size(); ++e) {
      if (Has(x, e)) continue;
      const Mask y = x | (Mask{1} << e);
      if ((cx & cs(y)) != cx) return fail(Axiom::kMonotone, x, y);
    }
    if (x == full) break;
  }
  return rep;
}

AntiExchangeReport VerifyAntiExchange(const ClosureSystem& cs) {
  AntiExchangeReport rep;
  for (Mask x : cs.closed_sets()) {
    for (int p = 0; p < cs.size(); ++p) {
      if (Has(x, p)) continue;
      for (int q = 0; q < cs.size(); ++q) {
        if (q == p || Has(x, q)) continue;
        if (Has(cs(x | (Mask{1} << q)), p) && Has(cs(x | (Mask{1} << p)), q)) {
          rep.ok = false;
          rep.violation = AntiExchangeViolation{p, q, x};
          return rep;
        }
      }
    }
  }
  return rep;
}

bool IsConvexGeometry(const ClosureSystem& cs) {
  const AxiomReport ax = VerifyClosureAxioms(cs);
  return ax.ok && ax.empty_closed && VerifyAntiExchange(cs).ok;
}

ClosureSystem PointClosure(std::vector<Point> points, std::vector<std::string> labels) {
  const int n = static_cast<int>(points.size());
  auto pts = std::make_shared<const std::vector<Point>>(std::move(points));
  return ClosureSystem(
      n,
      [pts](Mask x, bool&) -> Mask {
        if (x == 0) return 0;
        std::vector<Point> sel;
        for (std::size_t i = 0; i < pts->size(); ++i) {
          if (Has(x, static_cast<int>(i))) sel.push_back((*pts)[i]);
        }
        const auto hull = ConvexHullVertices(sel);
        Mask out = x;
        for (std::size_t i = 0; i < pts->size(); ++i) {
          if (HullContains(std::span<const Point>(hull), (*pts)[i])) out |= Mask{1} << i;
        }
        return out;
      },
      DefaultLabels(n, std::move(labels), 'p'));
}

ClosureSystem CircleClosure(std::vector<Disk> disks, Tolerance tol,
                            std::vector<std::string> labels) {
  const int n = static_cast<int>(disks.size());
  std::vector<ConvexBody> bodies;
  for (const auto& d : disks) bodies.push_back(ConvexBody::MakeDisk(d.center, d.radius));
  auto shared = std::make_shared<const std::vector<ConvexBody>>(std::move(bodies));
  return ClosureSystem(
      n,
      [shared, tol](Mask x, bool& borderline) -> Mask {
        if (x == 0) return 0;
        std::vector<ConvexBody> sel;
        for (std::size_t i = 0; i < shared->size(); ++i) {
          if (Has(x, static_cast<int>(i))) sel.push_back((*shared)[i]);
        }
        const ConvexBody hull = ConvexBody::HullOfBodies(sel);
        Mask out = x;
        for (std::size_t i = 0; i < shared->size(); ++i) {
          if (Has(x, static_cast<int>(i))) continue;
          const double margin = InclusionMargin(hull, (*shared)[i]);
          if (std::abs(margin) <= tol.eps) borderline = true;
          if (margin >= 0) out |= Mask{1} << i;
        }
        return out;
      },
      DefaultLabels(n, std::move(labels), 'c'));
}

ClosureSystem TriangleClosure(std::vector<TriangleShape> shapes) {
  const int n = static_cast<int>(shapes.size());
  auto shared = std::make_shared<const std::vector<TriangleShape>>(std::move(shapes));
  return ClosureSystem(
      n,
      [shared](Mask x, bool&) -> Mask {
        if (x == 0) return 0;
        std::vector<Point> pts;
        for (std::size_t i = 0; i < shared->size(); ++i) {
          if (Has(x, static_cast<int>(i))) pts.insert(pts.end(), (*shared)[i].begin(), (*shared)[i].end());
        }
        const auto hull = ConvexHullVertices(pts);
        const std::span<const Point> h(hull);
        Mask out = x;
        for (std::size_t i = 0; i < shared->size(); ++i) {
          const auto& t = (*shared)[i];
          if (HullContains(h, t[0]) && HullContains(h, t[1]) && HullContains(h, t[2])) {
            out |= Mask{1} << i;
          }
        }
        return out;
      },
      DefaultLabels(n, {}, 't'));
}

TriangleShape EquilateralTriangle(const Point& center, double radius, double angle) {
  TriangleShape t;
  for (int i = 0; i < 3; ++i) t[i] = center + radius * UnitAt(angle + kTwoPi * i / 3);
  return t;
}

TriangleNonExample SearchTriangleNonExample(std::uint64_t seed, int trials, int max_shapes) {
  for (int trial = 0; trial < trials; ++trial) {
    SplitMix64 rng = TrialRng(seed, static_cast<std::uint64_t>(trial));
    const int n = static_cast<int>(rng.between(3, max_shapes));
    std::vector<std::array<std::int64_t, 4>> keys;
    std::vector<TriangleShape> shapes;
    for (int i = 0; i < n; ++i) {
      // First vertex on the integer grid so that vertices get shared; side a
      // multiple of 1/4, direction in whole degrees.
      const std::array<std::int64_t, 4> key{rng.between(0, 6), rng.between(0, 6),
                                            rng.between(4, 24), rng.between(0, 359)};
      keys.push_back(key);
      const Point v{static_cast<double>(key[0]), static_cast<double>(key[1])};
      const double side = std::ldexp(static_cast<double>(key[2]), -2);
      const double angle = static_cast<double>(key[3]) * kTwoPi / 360;
      shapes.push_back({v, v + side * UnitAt(angle), v + side * UnitAt(angle + kTwoPi / 6)});
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) continue;
    const ClosureSystem cs = TriangleClosure(shapes);
    if (!VerifyClosureAxioms(cs).ok) continue;
    const AntiExchangeReport ae = VerifyAntiExchange(cs);
    if (!ae.ok) return {std::move(shapes), *ae.violation};
  }
  throw Error(ErrorCode::kGenerationFailed, "no anti-exchange violation found");
}

TriangleNonExample TriangleNonExampleFixture() {
  // SearchTriangleNonExample(1, 200000, 3). Triangles 0 and 2 share the
  // vertex (6, 2); with X = {1} each lies in the hull of X and the other.
  std::vector<TriangleShape> shapes = {
      {{{0x1.8p+2, 0x1p+1}, {0x1.07d319bf3e3ffp+3, 0x1.d7d1fd49d0c9cp+0},
        {0x1.d086165250f2dp+2, 0x1.eec3483af063ep+1}}},
      {{{0x1.4p+2, 0x1.8p+1}, {0x1.417df169b0086p+3, 0x1.8d8b1bdada55cp+0},
        {0x1.18d95dbae3d59p+3, 0x1.a967bc0134b7ep+2}}},
      {{{0x1.8p+2, 0x1p+1}, {0x1.fd33f0c9e802p+2, 0x1.3539b35884b1fp+1},
        {0x1.a78dde6e5fd2ap+2, 0x1.f378709a22a8p+1}}},
  };
  return {std::move(shapes), AntiExchangeViolation{0, 2, 0b010}};
}

}  // namespace carousel
