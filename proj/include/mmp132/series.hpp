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

#ifndef MMP132_SERIES_HPP_
#define MMP132_SERIES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mmp132/errors.hpp"
#include "mmp132/integer.hpp"
#include "mmp132/xpoly.hpp"

namespace mmp132 {

inline constexpr std::size_t kDefaultOrder = 12;

// Power series in t truncated after t^order, with XPoly coefficients.
// Always stores exactly order + 1 coefficients; nothing above t^order is
// ever read or produced.
class TSeries {
 public:
  explicit TSeries(std::size_t order) : coeffs_(order + 1) {}

  // Coefficients past t^order are dropped; missing ones are zero.
  TSeries(std::size_t order, std::vector<XPoly> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1);
  }

  static TSeries one(std::size_t order) { return constant(order, XPoly(1)); }
  static TSeries constant(std::size_t order, XPoly c) { return monomial(order, std::move(c), 0); }
  // c * t^k; zero when k > order.
  static TSeries monomial(std::size_t order, XPoly c, std::size_t k) {
    TSeries s(order);
    if (k <= order) s.coeffs_[k] = std::move(c);
    return s;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const XPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<XPoly>& coefficients() const { return coeffs_; }
  void set(std::size_t n, XPoly p) { coeffs_.at(n) = std::move(p); }

  TSeries& operator+=(const TSeries& o) {
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
    return *this;
  }
  TSeries& operator-=(const TSeries& o) {
    require_same_order(o);
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
    return *this;
  }

  // Multiplication by t^k.
  TSeries shifted(std::size_t k = 1) const {
    TSeries r(order());
    for (std::size_t n = 0; n + k <= order(); ++n) r.coeffs_[n + k] = coeffs_[n];
    return r;
  }

  // Termwise substitution of a value for x.
  TSeries at_x(const BigInt& value) const {
    TSeries r(order());
    for (std::size_t n = 0; n <= order(); ++n) r.coeffs_[n] = XPoly(coeffs_[n].eval(value));
    return r;
  }

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator-(TSeries a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  // Cauchy product truncated at t^order.
  friend TSeries operator*(const TSeries& u, const TSeries& v) {
    u.require_same_order(v);
    TSeries r(u.order());
    for (std::size_t i = 0; i <= u.order(); ++i) {
      if (u.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= u.order(); ++j)
        r.coeffs_[i + j].add_product(u.coeffs_[i], v.coeffs_[j]);
    }
    return r;
  }
  friend TSeries operator*(const XPoly& c, const TSeries& u) {
    TSeries r(u.order());
    for (std::size_t n = 0; n <= u.order(); ++n) r.coeffs_[n] = c * u.coeffs_[n];
    return r;
  }

  friend bool operator==(const TSeries&, const TSeries&) = default;

 private:
  void require_same_order(const TSeries& o) const {
    if (o.order() != order())
      throw InvalidInput("truncation order mismatch: " + std::to_string(order()) + " vs " +
                         std::to_string(o.order()));
  }
  std::vector<XPoly> coeffs_;
};

inline TSeries series_add(const TSeries& u, const TSeries& v) { return u + v; }
inline TSeries series_mul(const TSeries& u, const TSeries& v) { return u * v; }

// 1/u for a constant term of exactly +1 or -1; coefficients stay integral.
inline TSeries series_reciprocal(const TSeries& u) {
  const XPoly& u0 = u[0];
  if (!(u0 == XPoly(1) || u0 == XPoly(-1)))
    throw InvalidInput("series_reciprocal: constant term must be +1 or -1");
  TSeries v(u.order());
  v.set(0, u0);
  for (std::size_t n = 1; n <= u.order(); ++n) {
    XPoly acc;
    for (std::size_t j = 1; j <= n; ++j) acc.add_product(u[j], v[n - j]);
    // u0 is its own inverse.
    v.set(n, -(u0 * acc));
  }
  return v;
}

// sum_{j=lo}^{hi} C_j t^j; empty (zero) when hi < lo.
inline TSeries catalan_partial_sum(long lo, long hi, std::size_t order) {
  TSeries s(order);
  for (long j = std::max(lo, 0L); j <= hi && j <= static_cast<long>(order); ++j)
    s.set(static_cast<std::size_t>(j), XPoly(catalan(static_cast<std::uint64_t>(j))));
  return s;
}

// C(t) = sum_n C_n t^n.
inline TSeries catalan_series(std::size_t order) {
  return catalan_partial_sum(0, static_cast<long>(order), order);
}

// C(xt): coefficient of t^n is C_n x^n.
inline TSeries catalan_xt_series(std::size_t order) {
  TSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s.set(n, XPoly::monomial(catalan(n), n));
  return s;
}

// The power series Q with Q(0) = 1 solving
//   t x Q^2 - (1 + (tx - t) S_k) Q + 1 = 0,   S_k = sum_{j<k} C_j t^j,
// by the fixed point Q = (1 + t x Q^2) / D with D = 1 + (tx - t) S_k.
// Since D(0) = 1, Q_n = [n == 0] + x sum_{j<n} Q_j Q_{n-1-j} - sum_{j<n} Q_j D_{n-j}.
inline TSeries solve_q00k0(unsigned k, std::size_t order) {
  if (k == 0) throw InvalidInput("solve_q00k0: k must be >= 1");
  const XPoly x_minus_1 = XPoly::x() - XPoly(1);
  const TSeries d =
      TSeries::one(order) + x_minus_1 * catalan_partial_sum(0, static_cast<long>(k) - 1, order).shifted();
  TSeries q(order);
  for (std::size_t n = 0; n <= order; ++n) {
    XPoly quad;
    for (std::size_t j = 0; j < n; ++j) quad.add_product(q[j], q[n - 1 - j]);
    XPoly qn = quad.shifted(1);
    if (n == 0) qn += XPoly(1);
    XPoly lower;
    for (std::size_t j = 0; j < n; ++j) lower.add_product(q[j], d[n - j]);
    q.set(n, qn - lower);
  }
  return q;
}

// One "t^n: <poly>" line per order.
inline std::string to_string(const TSeries& s) {
  std::string out;
  for (std::size_t n = 0; n <= s.order(); ++n)
    out += "t^" + std::to_string(n) + ": " + to_string(s[n]) + "\n";
  return out;
}

}  // namespace mmp132

#endif  // MMP132_SERIES_HPP_
