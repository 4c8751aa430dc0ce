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

#include "carousel/geom.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace carousel {

Rational ParseRational(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorCode::kParseError, "empty rational");
  try {
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
      Rational q(s, 10);
      q.canonicalize();
      return q;
    }
    // Decimal literal: shift the point out and divide by a power of ten.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac_len = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") {
      throw Error(ErrorCode::kParseError, "bad decimal '" + text + "'");
    }
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::kParseError, "bad rational '" + text + "'");
  }
}

std::string ToString(const Rational& q) { return q.get_str(10); }

std::string_view ToString(Side s) {
  switch (s) {
    case Side::kLeft: return "left";
    case Side::kOn: return "on";
    case Side::kRight: return "right";
  }
  return "?";
}

int Orient2d(const PointQ& a, const PointQ& b, const PointQ& c) {
  const Rational det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(det);
}

int Orient2d(const Point& a, const Point& b, const Point& c) {
  const double detleft = (b.x - a.x) * (c.y - a.y);
  const double detright = (b.y - a.y) * (c.x - a.x);
  const double det = detleft - detright;
  // Shewchuk's first-stage bound, widened to also cover the rounding of the
  // coordinate differences.
  constexpr double kEps = std::numeric_limits<double>::epsilon() / 2;
  constexpr double kBound = (3.0 + 16.0 * kEps) * kEps * 2.0;
  const double errbound = kBound * (std::abs(detleft) + std::abs(detright));
  if (det > errbound) return 1;
  if (-det > errbound) return -1;
  if (detleft == 0 && detright == 0 && det == 0) {
    // Products can underflow to zero, so only trust this when the inputs
    // themselves make the determinant vanish; otherwise go exact.
    if ((b.x == a.x && b.y == a.y) || (c.x == a.x && c.y == a.y)) return 0;
  }
  return Orient2d(ToRational(a), ToRational(b), ToRational(c));
}

Point ClosestOnSegment(const Point& a, const Point& b, const Point& p) {
  const Point ab = b - a;
  const double len2 = SquaredNorm(ab);
  if (len2 == 0) return a;
  const double t = std::clamp(Dot(p - a, ab) / len2, 0.0, 1.0);
  return a + t * ab;
}

}  // namespace carousel
