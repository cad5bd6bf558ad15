// Copyright 2026 The mmp132 Authors
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

#ifndef MMP132_MESH_PATTERN_HPP_
#define MMP132_MESH_PATTERN_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mmp132/errors.hpp"
#include "mmp132/permutation.hpp"

namespace mmp132 {

// Requirement on one quadrant: at least k points, or exactly none (EMPTY).
// EMPTY and at_least(0) are different conditions.
class QuadBound {
 public:
  constexpr QuadBound() = default;
  static constexpr QuadBound at_least(unsigned k) { return QuadBound(k, false); }
  static constexpr QuadBound empty() { return QuadBound(0, true); }

  constexpr bool is_empty() const { return empty_; }
  constexpr unsigned min_count() const { return k_; }

  constexpr bool admits(std::size_t count) const {
    return empty_ ? count == 0 : count >= k_;
  }

  friend constexpr bool operator==(QuadBound, QuadBound) = default;

 private:
  constexpr QuadBound(unsigned k, bool e) : k_(k), empty_(e) {}
  unsigned k_ = 0;
  bool empty_ = false;
};

// MMP(a,b,c,d); quadrant I is up-right, II up-left, III down-left, IV
// down-right of the point.
struct MmpPattern {
  QuadBound a, b, c, d;

  static constexpr MmpPattern nat(unsigned a, unsigned b, unsigned c, unsigned d) {
    return {QuadBound::at_least(a), QuadBound::at_least(b), QuadBound::at_least(c),
            QuadBound::at_least(d)};
  }

  friend constexpr bool operator==(const MmpPattern&, const MmpPattern&) = default;
};

struct QuadrantCounts {
  std::size_t q1 = 0, q2 = 0, q3 = 0, q4 = 0;
  friend constexpr bool operator==(const QuadrantCounts&, const QuadrantCounts&) = default;
};

// Points of G(sigma) in each quadrant around (i, sigma_i), 1 <= i <= n.
inline QuadrantCounts quadrant_counts(const Permutation& p, std::size_t i) {
  const int here = p.at(i);
  const auto v = p.values();
  QuadrantCounts q;
  for (std::size_t j = 0; j + 1 < i; ++j) (v[j] > here ? q.q2 : q.q3)++;
  for (std::size_t j = i; j < v.size(); ++j) (v[j] > here ? q.q1 : q.q4)++;
  return q;
}

inline bool matches(const QuadrantCounts& q, const MmpPattern& pat) {
  return pat.a.admits(q.q1) && pat.b.admits(q.q2) && pat.c.admits(q.q3) &&
         pat.d.admits(q.q4);
}

inline bool matches_at(const Permutation& p, std::size_t i, const MmpPattern& pat) {
  return matches(quadrant_counts(p, i), pat);
}

// mmp^{(a,b,c,d)}(sigma): number of positions matching the pattern.
inline std::size_t mmp_count(const Permutation& p, const MmpPattern& pat) {
  std::size_t count = 0;
  for (std::size_t i = 1; i <= p.size(); ++i)
    if (matches_at(p, i, pat)) ++count;
  return count;
}

inline Permutation inverse(const Permutation& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 1; i <= p.size(); ++i) inv[p.at(i) - 1] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

// "1,1,1,0" or "4,2,e,e": four comma-separated tokens, each a nonnegative
// decimal integer or "e" for EMPTY.
inline MmpPattern parse_mmp_pattern(std::string_view text) {
  std::array<QuadBound, 4> q;
  std::size_t start = 0;
  for (std::size_t idx = 0; idx < 4; ++idx) {
    const std::size_t end =
        idx == 3 ? text.size() : text.find(',', start);
    if (end == std::string_view::npos || end < start)
      throw InvalidInput("pattern needs four comma-separated entries");
    const auto tok = text.substr(start, end - start);
    if (tok == "e") {
      q[idx] = QuadBound::empty();
    } else {
      if (tok.empty() || tok.size() > 6) throw InvalidInput("bad pattern entry");
      unsigned k = 0;
      for (char ch : tok) {
        if (ch < '0' || ch > '9') throw InvalidInput("bad pattern entry");
        k = 10 * k + static_cast<unsigned>(ch - '0');
      }
      q[idx] = QuadBound::at_least(k);
    }
    start = end + 1;
  }
  return {q[0], q[1], q[2], q[3]};
}

inline std::string to_string(const MmpPattern& pat) {
  auto one = [](QuadBound b) {
    return b.is_empty() ? std::string("e") : std::to_string(b.min_count());
  };
  return one(pat.a) + "," + one(pat.b) + "," + one(pat.c) + "," + one(pat.d);
}

}  // namespace mmp132

#endif  // MMP132_MESH_PATTERN_HPP_
