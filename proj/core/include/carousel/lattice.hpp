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

// Small finite lattices given by their order relation.
//
// The order is kept as bit rows. Joins and meets are read off a linear
// extension: the first common upper bound in that order is the least one.

#ifndef CAROUSEL_LATTICE_HPP_
#define CAROUSEL_LATTICE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "carousel/convex_geometry.hpp"

namespace carousel {

inline constexpr int kMaxLatticeSize = 4096;

class FiniteLattice {
 public:
  /// leq(a, b) for a, b in [0, n). Throws SizeLimit above kMaxLatticeSize and
  /// PreconditionViolated when the relation is not a bounded lattice order.
  FiniteLattice(int n, const std::function<bool(int, int)>& leq,
                std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool leq(int a, int b) const { return Bit(up_[a], b); }
  int join(int a, int b) const;
  int meet(int a, int b) const;
  int bottom() const { return order_.front(); }
  int top() const { return order_.back(); }
  /// Elements covering a, and covered by a.
  const std::vector<int>& upper_covers(int a) const { return upper_[a]; }
  const std::vector<int>& lower_covers(int a) const { return lower_[a]; }
  bool covers(int a, int b) const;  // a is covered by b
  const std::vector<std::string>& labels() const { return labels_; }
  FiniteLattice dual() const;

 private:
  using Row = std::vector<std::uint64_t>;
  static bool Bit(const Row& r, int i) { return (r[i >> 6] >> (i & 63)) & 1U; }
  int n_;
  std::vector<Row> up_;    // up_[a] has b iff a <= b
  std::vector<Row> down_;  // down_[a] has b iff b <= a
  std::vector<int> order_;  // linear extension
  std::vector<int> rank_;   // position in order_
  std::vector<std::vector<int>> upper_, lower_;
  std::vector<std::string> labels_;
};

/// Semimodular and every interval [x, x*] distributive, where x* joins the
/// covers of x.
bool IsJoinDistributive(const FiniteLattice& l);
bool IsSemimodular(const FiniteLattice& l);
bool IsDistributiveInterval(const FiniteLattice& l, int lo, int hi);

/// Elements with exactly one lower cover.
std::vector<int> JoinIrreducibles(const FiniteLattice& l);

/// Closed sets of cs, ordered by reverse inclusion. Elements are listed in
/// increasing mask order and labelled by their members. SizeLimit above
/// kMaxLatticeGround ground elements.
struct ClosedSetLattice {
  std::vector<Mask> sets;
  FiniteLattice lattice;
};
ClosedSetLattice MakeClosedSetLattice(const ClosureSystem& cs);

/// The five-element lattices that are not distributive.
FiniteLattice M3Lattice();
FiniteLattice N5Lattice();
FiniteLattice ChainLattice(int n);
FiniteLattice BooleanLattice(int atoms);

/// "a: b c ..." per line listing upper covers, labels when present.
std::string ToAdjacencyText(const FiniteLattice& l);

}  // namespace carousel

#endif  // CAROUSEL_LATTICE_HPP_
