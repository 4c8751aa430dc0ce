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

#include "carousel/lattice.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace carousel {

FiniteLattice::FiniteLattice(int n, const std::function<bool(int, int)>& leq,
                             std::vector<std::string> labels)
    : n_(n) {
  if (n < 1) throw Error(ErrorCode::kPreconditionViolated, "empty lattice");
  if (n > kMaxLatticeSize) {
    throw Error(ErrorCode::kSizeLimit, "lattice larger than " + std::to_string(kMaxLatticeSize));
  }
  if (labels.empty()) {
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  labels_ = std::move(labels);
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  up_.assign(n, Row(words, 0));
  down_.assign(n, Row(words, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (leq(a, b)) {
        up_[a][b >> 6] |= std::uint64_t{1} << (b & 63);
        down_[b][a >> 6] |= std::uint64_t{1} << (a & 63);
      }
    }
  }
  auto count = [](const Row& r) {
    int c = 0;
    for (auto w : r) c += std::popcount(w);
    return c;
  };
  for (int a = 0; a < n; ++a) {
    if (!Bit(up_[a], a)) throw Error(ErrorCode::kPreconditionViolated, "order not reflexive");
    for (int b = a + 1; b < n; ++b) {
      if (Bit(up_[a], b) && Bit(up_[b], a)) {
        throw Error(ErrorCode::kPreconditionViolated, "order not antisymmetric");
      }
    }
  }
  // Transitivity: everything above b is above a whenever a <= b.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (!Bit(up_[a], b)) continue;
      for (std::size_t w = 0; w < words; ++w) {
        if ((up_[b][w] & ~up_[a][w]) != 0) {
          throw Error(ErrorCode::kPreconditionViolated, "order not transitive");
        }
      }
    }
  }
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  std::vector<int> below(n);
  for (int a = 0; a < n; ++a) below[a] = count(down_[a]);
  std::stable_sort(order_.begin(), order_.end(),
                   [&](int x, int y) { return below[x] < below[y]; });
  rank_.resize(n);
  for (int i = 0; i < n; ++i) rank_[order_[i]] = i;

  // Covers: b above a with nothing strictly between.
  upper_.assign(n, {});
  lower_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !Bit(up_[a], b)) continue;
      bool between = false;
      for (std::size_t w = 0; w < words && !between; ++w) {
        std::uint64_t mid = up_[a][w] & down_[b][w];
        // Drop a and b themselves.
        if (static_cast<std::size_t>(a >> 6) == w) mid &= ~(std::uint64_t{1} << (a & 63));
        if (static_cast<std::size_t>(b >> 6) == w) mid &= ~(std::uint64_t{1} << (b & 63));
        between = mid != 0;
      }
      if (!between) {
        upper_[a].push_back(b);
        lower_[b].push_back(a);
      }
    }
  }
  // Lattice: the first common upper bound must lie below every other one.
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int j = join(a, b), m = meet(a, b);
      if (j < 0 || m < 0) throw Error(ErrorCode::kPreconditionViolated, "not a lattice");
      for (std::size_t w = 0; w < words; ++w) {
        if ((up_[a][w] & up_[b][w] & ~up_[j][w]) != 0 ||
            (down_[a][w] & down_[b][w] & ~down_[m][w]) != 0) {
          throw Error(ErrorCode::kPreconditionViolated, "not a lattice");
        }
      }
    }
  }
}

int FiniteLattice::join(int a, int b) const {
  for (int i = std::max(rank_[a], rank_[b]); i < n_; ++i) {
    const int c = order_[i];
    if (Bit(up_[a], c) && Bit(up_[b], c)) return c;
  }
  return -1;
}

int FiniteLattice::meet(int a, int b) const {
  for (int i = std::min(rank_[a], rank_[b]); i >= 0; --i) {
    const int c = order_[i];
    if (Bit(down_[a], c) && Bit(down_[b], c)) return c;
  }
  return -1;
}

bool FiniteLattice::covers(int a, int b) const {
  const auto& u = upper_[a];
  return std::find(u.begin(), u.end(), b) != u.end();
}

FiniteLattice FiniteLattice::dual() const {
  return FiniteLattice(
      n_, [this](int a, int b) { return leq(b, a); }, labels_);
}

bool IsSemimodular(const FiniteLattice& l) {
  // a ^ b covered by a forces b covered by a v b.
  for (int a = 0; a < l.size(); ++a) {
    for (int b = 0; b < l.size(); ++b) {
      if (l.covers(l.meet(a, b), a) && !l.covers(b, l.join(a, b))) return false;
    }
  }
  return true;
}

bool IsDistributiveInterval(const FiniteLattice& l, int lo, int hi) {
  std::vector<int> s;
  for (int c = 0; c < l.size(); ++c) {
    if (l.leq(lo, c) && l.leq(c, hi)) s.push_back(c);
  }
  // Join-irreducibles of the interval: one lower cover inside it.
  std::vector<int> ji;
  for (int c : s) {
    int below = 0;
    for (int d : l.lower_covers(c)) below += l.leq(lo, d) ? 1 : 0;
    if (below == 1) ji.push_back(c);
  }
  // Distributive iff a -> {j <= a} turns joins into unions.
  const std::size_t words = (ji.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> down(static_cast<std::size_t>(l.size()));
  for (int c : s) {
    auto& bits = down[static_cast<std::size_t>(c)];
    bits.assign(words, 0);
    for (std::size_t i = 0; i < ji.size(); ++i) {
      if (l.leq(ji[i], c)) bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = x + 1; y < s.size(); ++y) {
      const auto& da = down[static_cast<std::size_t>(s[x])];
      const auto& db = down[static_cast<std::size_t>(s[y])];
      const auto& dj = down[static_cast<std::size_t>(l.join(s[x], s[y]))];
      for (std::size_t w = 0; w < words; ++w) {
        if (dj[w] != (da[w] | db[w])) return false;
      }
    }
  }
  return true;
}

bool IsJoinDistributive(const FiniteLattice& l) {
  if (!IsSemimodular(l)) return false;
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.top()) continue;
    int star = x;
    for (int y : l.upper_covers(x)) star = l.join(star, y);
    if (!IsDistributiveInterval(l, x, star)) return false;
  }
  return true;
}

std::vector<int> JoinIrreducibles(const FiniteLattice& l) {
  std::vector<int> out;
  for (int x = 0; x < l.size(); ++x) {
    if (l.lower_covers(x).size() == 1) out.push_back(x);
  }
  return out;
}

ClosedSetLattice MakeClosedSetLattice(const ClosureSystem& cs) {
  if (cs.size() > kMaxLatticeGround) {
    throw Error(ErrorCode::kSizeLimit,
                "closed-set lattice needs at most " + std::to_string(kMaxLatticeGround) +
                    " ground elements");
  }
  std::vector<Mask> sets = cs.closed_sets();
  if (static_cast<int>(sets.size()) > kMaxLatticeSize) {
    throw Error(ErrorCode::kSizeLimit, "too many closed sets");
  }
  std::vector<std::string> labels;
  for (Mask m : sets) {
    std::string s = "{";
    for (int i = 0; i < cs.size(); ++i) {
      if ((m >> i) & 1U) {
        if (s.size() > 1) s += ",";
        s += cs.labels()[i];
      }
    }
    labels.push_back(s + "}");
  }
  FiniteLattice lat(
      static_cast<int>(sets.size()),
      [&](int a, int b) { return (sets[a] & sets[b]) == sets[b]; }, std::move(labels));
  return {std::move(sets), std::move(lat)};
}

FiniteLattice M3Lattice() {
  // 0 < a, b, c < 1 with a, b, c pairwise incomparable.
  return FiniteLattice(
      5, [](int x, int y) { return x == y || x == 0 || y == 4; }, {"0", "a", "b", "c", "1"});
}

FiniteLattice N5Lattice() {
  // 0 < a < b < 1 and 0 < c < 1.
  static const bool kLeq[5][5] = {{1, 1, 1, 1, 1},
                                  {0, 1, 1, 0, 1},
                                  {0, 0, 1, 0, 1},
                                  {0, 0, 0, 1, 1},
                                  {0, 0, 0, 0, 1}};
  return FiniteLattice(
      5, [](int x, int y) { return kLeq[x][y]; }, {"0", "a", "b", "c", "1"});
}

FiniteLattice ChainLattice(int n) {
  return FiniteLattice(n, [](int x, int y) { return x <= y; });
}

FiniteLattice BooleanLattice(int atoms) {
  if (atoms < 0 || atoms > 12) throw Error(ErrorCode::kSizeLimit, "at most 12 atoms");
  return FiniteLattice(1 << atoms, [](int x, int y) { return (x & y) == x; });
}

std::string ToAdjacencyText(const FiniteLattice& l) {
  std::ostringstream os;
  for (int a = 0; a < l.size(); ++a) {
    os << l.labels()[a] << ":";
    for (int b : l.upper_covers(a)) os << " " << l.labels()[b];
    os << "\n";
  }
  return os.str();
}

}  // namespace carousel
