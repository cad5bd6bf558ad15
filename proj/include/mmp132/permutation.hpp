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

#ifndef MMP132_PERMUTATION_HPP_
#define MMP132_PERMUTATION_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "mmp132/errors.hpp"
#include "mmp132/integer.hpp"

namespace mmp132 {

class Permutation;
namespace detail {
struct PermutationAccess;
}  // namespace detail

// A permutation of {1, ..., n} in one-line notation. Positions and values
// are one-based, as in sigma = sigma_1 ... sigma_n.
class Permutation {
 public:
  Permutation() = default;

  // Throws InvalidInput unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {
    std::vector<bool> seen(values_.size() + 1, false);
    for (int v : values_) {
      if (v < 1 || static_cast<std::size_t>(v) > values_.size() || seen[v])
        throw InvalidInput("not a permutation of 1..n");
      seen[v] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(Unchecked{}, std::move(v));
  }

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  // sigma_i for 1 <= i <= n.
  int at(std::size_t i) const {
    if (i < 1 || i > values_.size()) throw InvalidInput("position out of range");
    return values_[i - 1];
  }

  std::span<const int> values() const { return values_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(Unchecked, std::vector<int> values) : values_(std::move(values)) {}

  friend struct detail::PermutationAccess;

  std::vector<int> values_;
};

namespace detail {

struct PermutationAccess {
  static Permutation unchecked(std::vector<int> v) {
    return Permutation(Permutation::Unchecked{}, std::move(v));
  }
  static int* data(Permutation& p) { return p.values_.data(); }
};

}  // namespace detail

// red[w]: replaces the i-th smallest entry of `word` by i.
inline Permutation reduce(std::span<const int> word) {
  std::vector<std::size_t> order(word.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return word[x] < word[y]; });
  std::vector<int> out(word.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && word[order[r]] == word[order[r - 1]])
      throw InvalidInput("reduce: duplicate entries");
    out[order[r]] = static_cast<int>(r + 1);
  }
  return detail::PermutationAccess::unchecked(std::move(out));
}

// True iff there are no i < j < k with sigma_i < sigma_k < sigma_j.
inline bool avoids_132(const Permutation& p) {
  const auto v = p.values();
  int min_left = 0;  // 0 means "no element to the left yet"
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (min_left != 0 && min_left < v[j]) {
      for (std::size_t k = j + 1; k < v.size(); ++k)
        if (min_left < v[k] && v[k] < v[j]) return false;
    }
    if (min_left == 0 || v[j] < min_left) min_left = v[j];
  }
  return true;
}

namespace detail {

// Extends a partial embedding of `pat` into `text`: positions chosen so far
// are in `chosen`, and the next pattern letter goes at or after `from`.
inline bool embed(std::span<const int> text, std::span<const int> pat,
                  std::vector<std::size_t>& chosen, std::size_t from) {
  const std::size_t depth = chosen.size();
  if (depth == pat.size()) return true;
  if (text.size() - from < pat.size() - depth) return false;
  for (std::size_t pos = from; pos < text.size(); ++pos) {
    bool consistent = true;
    for (std::size_t q = 0; q < depth && consistent; ++q)
      consistent = (pat[q] < pat[depth]) == (text[chosen[q]] < text[pos]);
    if (!consistent) continue;
    chosen.push_back(pos);
    if (embed(text, pat, chosen, pos + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

// Non-owning reference to a callable; the enumerator nests these per level.
template <class Sig>
class FunctionRef;

template <class R, class... Args>
class FunctionRef<R(Args...)> {
 public:
  template <class F>
    requires(!std::is_same_v<std::remove_cvref_t<F>, FunctionRef>)
  FunctionRef(F&& f)  // NOLINT(google-explicit-constructor)
      : obj_(const_cast<void*>(static_cast<const void*>(&f))),
        call_([](void* o, Args... a) -> R {
          return (*static_cast<std::remove_reference_t<F>*>(o))(
              std::forward<Args>(a)...);
        }) {}

  R operator()(Args... a) const { return call_(obj_, std::forward<Args>(a)...); }

 private:
  void* obj_;
  R (*call_)(void*, Args...);
};

inline void fill_avoiders_at(int* out, int lo, int len, int i,
                             FunctionRef<void()> done);

// Writes every 132-avoiding arrangement of the values lo+1 .. lo+len into
// out[0 .. len), calling `done` once per arrangement. The maximum sits at
// position i; the i-1 entries before it take the top values and the rest
// take the bottom ones.
inline void fill_avoiders(int* out, int lo, int len, FunctionRef<void()> done) {
  if (len == 0) {
    done();
    return;
  }
  for (int i = 1; i <= len; ++i) fill_avoiders_at(out, lo, len, i, done);
}

inline void fill_avoiders_at(int* out, int lo, int len, int i,
                             FunctionRef<void()> done) {
  out[i - 1] = lo + len;
  auto right = [&] { fill_avoiders(out + i, lo, len - i, done); };
  fill_avoiders(out, lo + len - i, i - 1, right);
}

inline void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap)
    throw ResourceLimit("enumeration of S_" + std::to_string(n) +
                        "(132) exceeds cap n <= " + std::to_string(cap));
}

}  // namespace detail

inline constexpr std::size_t kDefaultEnumerationCap = 14;

// Calls fn(const Permutation&) once for every element of S_n(132), in
// order of the position of n. The permutation object is reused between
// calls; copy it to keep it.
template <class Fn>
void for_each_avoider(std::size_t n, Fn&& fn,
                      std::size_t cap = kDefaultEnumerationCap) {
  detail::check_cap(n, cap);
  auto p = detail::PermutationAccess::unchecked(std::vector<int>(n));
  auto emit = [&] { fn(std::as_const(p)); };
  detail::fill_avoiders(detail::PermutationAccess::data(p), 0, static_cast<int>(n), emit);
}

// The subtree of S_n(132) with sigma_i = n. These are disjoint for distinct
// i and can be handed to independent workers.
template <class Fn>
void for_each_avoider_with_max_at(std::size_t n, std::size_t i, Fn&& fn,
                                  std::size_t cap = kDefaultEnumerationCap) {
  detail::check_cap(n, cap);
  if (i < 1 || i > n) throw InvalidInput("position of n out of range");
  auto p = detail::PermutationAccess::unchecked(std::vector<int>(n));
  auto emit = [&] { fn(std::as_const(p)); };
  detail::fill_avoiders_at(detail::PermutationAccess::data(p), 0, static_cast<int>(n),
                           static_cast<int>(i), emit);
}

inline std::vector<Permutation> avoiders(std::size_t n,
                                         std::size_t cap = kDefaultEnumerationCap) {
  std::vector<Permutation> out;
  for_each_avoider(n, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

// True iff some subsequence of p reduces to pat.
inline bool contains_classical(const Permutation& p, const Permutation& pat) {
  std::vector<std::size_t> chosen;
  chosen.reserve(pat.size());
  return detail::embed(p.values(), pat.values(), chosen, 0);
}

// "471569283" for n <= 9, "10,3,1,2,..." otherwise.
inline std::string to_string(const Permutation& p) {
  std::string s;
  const bool digits = p.size() <= 9;
  for (std::size_t i = 1; i <= p.size(); ++i) {
    if (!digits && i > 1) s += ',';
    s += std::to_string(p.at(i));
  }
  return s;
}

// Accepts both serialized forms.
inline Permutation parse_permutation(std::string_view text) {
  std::vector<int> v;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw InvalidInput("bad permutation text");
      v.push_back(ch - '0');
    }
    return Permutation(std::move(v));
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const auto tok = text.substr(start, end - start);
    if (tok.empty()) throw InvalidInput("bad permutation text");
    int x = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9' || x > 100000) throw InvalidInput("bad permutation text");
      x = 10 * x + (ch - '0');
    }
    v.push_back(x);
    start = end + 1;
  }
  return Permutation(std::move(v));
}

}  // namespace mmp132

#endif  // MMP132_PERMUTATION_HPP_
