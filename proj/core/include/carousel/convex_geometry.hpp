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

// Finite closure systems over small ground sets, with subsets as bitmasks.
//
// A closure operator is extensive, monotone and idempotent; it is a convex
// geometry when in addition the empty set is closed and anti-exchange holds:
// for closed X and distinct p, q outside X, p in cl(X + q) forbids
// q in cl(X + p).

#ifndef CAROUSEL_CONVEX_GEOMETRY_HPP_
#define CAROUSEL_CONVEX_GEOMETRY_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "carousel/bodies.hpp"

namespace carousel {

using Mask = std::uint32_t;

inline constexpr int kMaxGround = 20;
inline constexpr int kMaxLatticeGround = 16;

class ClosureSystem {
 public:
  /// The flag argument is raised when a decision was within tolerance.
  using Operator = std::function<Mask(Mask, bool& borderline)>;

  /// SizeLimit above kMaxGround elements.
  ClosureSystem(int n, Operator op, std::vector<std::string> labels = {});
  /// Tabulated operator; table[x] = cl(x) for all 2^n masks.
  static ClosureSystem FromTable(int n, std::vector<Mask> table,
                                 std::vector<std::string> labels = {});

  int size() const { return n_; }
  Mask full() const { return n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Memoized.
  Mask operator()(Mask x) const;
  bool is_closed(Mask x) const { return (*this)(x) == x; }
  std::vector<Mask> closed_sets() const;
  /// Some evaluated closure depended on a margin within tolerance.
  bool indeterminate() const { return state_->borderline; }

 private:
  struct State {
    Operator op;
    std::vector<Mask> memo;
    std::vector<bool> known;
    bool borderline = false;
  };
  int n_;
  std::vector<std::string> labels_;
  std::shared_ptr<State> state_;
};

enum class Axiom { kExtensive, kMonotone, kIdempotent };
std::string_view ToString(Axiom a);

struct AxiomViolation {
  Axiom axiom = Axiom::kExtensive;
  Mask x = 0;
  Mask y = 0;  // the larger set for monotonicity
};

struct AxiomReport {
  bool ok = true;
  std::optional<AxiomViolation> violation;  // first one in mask order
  bool empty_closed = true;
};

/// Exhaustive. Monotonicity is checked on every pair X, X + e, which implies
/// it for all pairs X subset Y.
AxiomReport VerifyClosureAxioms(const ClosureSystem& cs);

struct AntiExchangeViolation {
  int p = 0;
  int q = 0;
  Mask x = 0;
};

struct AntiExchangeReport {
  bool ok = true;
  std::optional<AntiExchangeViolation> violation;
};

/// Exhaustive over closed X and ordered pairs p != q outside X.
AntiExchangeReport VerifyAntiExchange(const ClosureSystem& cs);

/// Closure axioms, closed empty set and anti-exchange.
bool IsConvexGeometry(const ClosureSystem& cs);

/// cl(X) = E n conv(X), exact.
ClosureSystem PointClosure(std::vector<Point> points, std::vector<std::string> labels = {});

/// cl(X) = disks of E inside conv(union of X). Margins within eps mark the
/// system indeterminate; the decision then follows the sign.
ClosureSystem CircleClosure(std::vector<Disk> disks, Tolerance tol = {},
                            std::vector<std::string> labels = {});

/// cl(X) = triangles of E inside conv(union of X), exact on vertices.
using TriangleShape = std::array<Point, 3>;
ClosureSystem TriangleClosure(std::vector<TriangleShape> shapes);

/// Equilateral triangle with the given center, circumradius and rotation.
TriangleShape EquilateralTriangle(const Point& center, double radius, double angle);

struct TriangleNonExample {
  std::vector<TriangleShape> shapes;
  AntiExchangeViolation violation;
};

/// Random search over 3 to max_shapes distinct equilateral triangles for a
/// configuration whose closure breaks anti-exchange. A violation forces two
/// triangles to share a vertex outside the hull of X, so every triangle is
/// drawn with one vertex on a small integer grid. GenerationFailed when
/// nothing turns up within the trial budget.
TriangleNonExample SearchTriangleNonExample(std::uint64_t seed, int trials, int max_shapes = 5);

/// The committed configuration found by the search above.
TriangleNonExample TriangleNonExampleFixture();

}  // namespace carousel

#endif  // CAROUSEL_CONVEX_GEOMETRY_HPP_
