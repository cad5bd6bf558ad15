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

#ifndef MMP132_DISTRIBUTION_HPP_
#define MMP132_DISTRIBUTION_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mmp132/errors.hpp"
#include "mmp132/mesh_pattern.hpp"
#include "mmp132/permutation.hpp"
#include "mmp132/series.hpp"
#include "mmp132/xpoly.hpp"

namespace mmp132 {

// An all-natural pattern (a,b,c,d); no EMPTY coordinates.
struct PatternKey {
  unsigned a = 0, b = 0, c = 0, d = 0;

  unsigned total() const { return a + b + c + d; }
  // (a,b,c,d) -> (a,d,c,b): the statistic on sigma^{-1}.
  PatternKey mirrored() const { return {a, d, c, b}; }
  MmpPattern as_mmp() const { return MmpPattern::nat(a, b, c, d); }

  friend auto operator<=>(const PatternKey&, const PatternKey&) = default;
};

inline std::string to_string(const PatternKey& p) {
  return std::to_string(p.a) + "," + std::to_string(p.b) + "," + std::to_string(p.c) + "," +
         std::to_string(p.d);
}

// Rejects "e" entries.
inline PatternKey parse_pattern_key(std::string_view text) {
  const MmpPattern m = parse_mmp_pattern(text);
  for (QuadBound q : {m.a, m.b, m.c, m.d})
    if (q.is_empty()) throw InvalidInput("EMPTY entries are not supported here");
  return {m.a.min_count(), m.b.min_count(), m.c.min_count(), m.d.min_count()};
}

// Every all-natural pattern with a+b+c+d <= bound, in lexicographic order.
inline std::vector<PatternKey> patterns_up_to_total(unsigned bound) {
  std::vector<PatternKey> out;
  for (unsigned a = 0; a <= bound; ++a)
    for (unsigned b = 0; a + b <= bound; ++b)
      for (unsigned c = 0; a + b + c <= bound; ++c)
        for (unsigned d = 0; a + b + c + d <= bound; ++d) out.push_back({a, b, c, d});
  return out;
}

// Q_n(x) = sum over S_n(132) of x^{mmp(sigma)}, by enumeration. EMPTY
// coordinates are allowed here.
inline XPoly q_poly_bruteforce(std::size_t n, const MmpPattern& pat,
                               std::size_t cap = kDefaultEnumerationCap) {
  std::vector<std::uint64_t> hist(n + 1, 0);
  for_each_avoider(
      n, [&](const Permutation& p) { ++hist[mmp_count(p, pat)]; }, cap);
  std::vector<BigInt> coeffs;
  coeffs.reserve(hist.size());
  for (auto h : hist) coeffs.emplace_back(static_cast<unsigned long>(h));
  return XPoly(std::move(coeffs));
}

inline XPoly q_poly_bruteforce(std::size_t n, const PatternKey& pat,
                               std::size_t cap = kDefaultEnumerationCap) {
  return q_poly_bruteforce(n, pat.as_mmp(), cap);
}

// Whether the maximum n, sitting at position i of a length-n permutation,
// matches the pattern. Quadrants I and II of n are always empty, III holds
// i-1 points and IV holds n-i.
using MaxMatchRule = bool (*)(const PatternKey&, std::size_t n, std::size_t i);

inline bool standard_max_match(const PatternKey& p, std::size_t n, std::size_t i) {
  return p.a == 0 && p.b == 0 && i - 1 >= p.c && n - i >= p.d;
}

// Memoized structural recursion on the position i of n:
//
//   Q_n^{(a,b,c,d)} = sum_{i=1}^{n} w_i Q_{i-1}^{(a-1, b, c, d-(n-i))} Q_{n-i}^{(a, b-i, c, d)}
//
// with truncated subtraction and w_i = x when n itself matches. Entries to
// the left of n see n in quadrant I and the n-i right entries in quadrant
// IV; entries to the right see all i earlier entries in quadrant II.
//
// Tables are filled bottom-up in n, so there is no deep call stack. An
// instance is not thread-safe; use one engine per thread.
class DistributionEngine {
 public:
  explicit DistributionEngine(MaxMatchRule rule = standard_max_match) : rule_(rule) {}

  const XPoly& q_poly(std::size_t n, const PatternKey& pat) {
    fill(n, pat);
    return lookup(n, pat);
  }

  TSeries q_series(const PatternKey& pat, std::size_t order) {
    fill(order, pat);
    TSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s.set(n, lookup(n, pat));
    return s;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  // Entries at or above n are all equivalent: no point of a length-n
  // permutation has n points in one quadrant.
  static std::array<unsigned, 5> key(std::size_t n, const PatternKey& p) {
    const auto cap = static_cast<unsigned>(std::min<std::size_t>(n, 1u << 30));
    return {static_cast<unsigned>(n), std::min(p.a, cap), std::min(p.b, cap),
            std::min(p.c, cap), std::min(p.d, cap)};
  }

  const XPoly& lookup(std::size_t n, const PatternKey& p) const { return memo_.at(key(n, p)); }

  static unsigned minus(unsigned u, std::size_t v) {
    return v >= u ? 0u : u - static_cast<unsigned>(v);
  }

  // Every pattern the recursion can reach from `pat` has the same c and
  // coordinatewise smaller a, b, d.
  void fill(std::size_t n, const PatternKey& pat) {
    if (memo_.count(key(n, pat))) return;
    for (std::size_t m = 0; m <= n; ++m)
      for (unsigned a = 0; a <= std::min<std::size_t>(pat.a, m); ++a)
        for (unsigned b = 0; b <= std::min<std::size_t>(pat.b, m); ++b)
          for (unsigned d = 0; d <= std::min<std::size_t>(pat.d, m); ++d)
            compute({a, b, pat.c, d}, m);
  }

  void compute(const PatternKey& p, std::size_t n) {
    const auto k = key(n, p);
    if (memo_.count(k)) return;
    XPoly q;
    if (n == 0) {
      q = XPoly(1);
    } else {
      for (std::size_t i = 1; i <= n; ++i) {
        const XPoly& left = lookup(i - 1, {minus(p.a, 1), p.b, p.c, minus(p.d, n - i)});
        const XPoly& right = lookup(n - i, {p.a, minus(p.b, i), p.c, p.d});
        if (rule_(p, n, i)) {
          q += (left * right).shifted(1);
        } else {
          q.add_product(left, right);
        }
      }
    }
    memo_.emplace(k, std::move(q));
  }

  MaxMatchRule rule_;
  std::map<std::array<unsigned, 5>, XPoly> memo_;
};

inline XPoly q_poly_recursive(std::size_t n, const PatternKey& pat) {
  DistributionEngine engine;
  return engine.q_poly(n, pat);
}

inline TSeries q_series_recursive(const PatternKey& pat, std::size_t order) {
  DistributionEngine engine;
  return engine.q_series(pat, order);
}

}  // namespace mmp132

#endif  // MMP132_DISTRIBUTION_HPP_
