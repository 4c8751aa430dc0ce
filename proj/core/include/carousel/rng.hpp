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

// SplitMix64 (Steele, Lea, Flood 2014). The state is a plain counter
// advanced by the golden-ratio increment and every output is a fixed mix of
// the counter, so a stream is reproducible from its seed in any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Doubles take the top 53 bits: (next() >> 11) * 2^-53, in [0, 1).

#ifndef CAROUSEL_RNG_HPP_
#define CAROUSEL_RNG_HPP_

#include <cstdint>

#include "carousel/geom.hpp"

namespace carousel {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Integer in [0, n); plain modulo, the bias is irrelevant at our n.
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  /// Rational k/den with k uniform so the value lies in [lo, hi].
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t den) {
    const std::int64_t k = between(lo * den, hi * den);
    Rational q(static_cast<long>(k), static_cast<long>(den));
    q.canonicalize();
    return q;
  }
  Point point_in_box(double lo, double hi) { return {uniform(lo, hi), uniform(lo, hi)}; }

 private:
  std::uint64_t state_;
};

/// Per-trial stream: seed XOR trial index.
inline SplitMix64 TrialRng(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(seed ^ trial);
}

}  // namespace carousel

#endif  // CAROUSEL_RNG_HPP_
