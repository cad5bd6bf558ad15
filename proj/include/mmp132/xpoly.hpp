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

#ifndef MMP132_XPOLY_HPP_
#define MMP132_XPOLY_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmp132/errors.hpp"
#include "mmp132/integer.hpp"

namespace mmp132 {

// Polynomial in x with exact integer coefficients. coeffs_[r] is the
// coefficient of x^r; the top stored coefficient is never zero, so the zero
// polynomial is the empty vector.
class XPoly {
 public:
  XPoly() = default;
  XPoly(long c) : XPoly(BigInt(c)) {}  // NOLINT(google-explicit-constructor)
  XPoly(const BigInt& c) {             // NOLINT(google-explicit-constructor)
    if (c != 0) coeffs_.push_back(c);
  }
  explicit XPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static XPoly monomial(const BigInt& c, std::size_t r) {
    XPoly p;
    if (c != 0) {
      p.coeffs_.resize(r + 1);
      p.coeffs_[r] = c;
    }
    return p;
  }
  static XPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  std::span<const BigInt> coefficients() const { return coeffs_; }

  // Coefficient of x^r; zero above the degree.
  BigInt coeff(std::size_t r) const { return r < coeffs_.size() ? coeffs_[r] : BigInt(0); }
  const BigInt& leading() const { return coeffs_.back(); }

  BigInt eval(const BigInt& at) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  XPoly& operator+=(const XPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t r = 0; r < o.coeffs_.size(); ++r) coeffs_[r] += o.coeffs_[r];
    trim();
    return *this;
  }
  XPoly& operator-=(const XPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t r = 0; r < o.coeffs_.size(); ++r) coeffs_[r] -= o.coeffs_[r];
    trim();
    return *this;
  }
  XPoly& operator*=(const XPoly& o) { return *this = *this * o; }

  // this += a * b without a temporary product.
  void add_product(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    const std::size_t need = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (coeffs_.size() < need) coeffs_.resize(need);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        mpz_addmul(coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                   b.coeffs_[j].get_mpz_t());
    }
    trim();
  }

  // Multiplication by x^k.
  XPoly shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> c(k);
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return XPoly(std::move(c));
  }

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator-(XPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r;
    r.add_product(a, b);
    return r;
  }
  friend bool operator==(const XPoly&, const XPoly&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

// Ascending powers, e.g. "99+29x+4x^2", "1-x", "0".
inline std::string to_string(const XPoly& p) {
  if (p.is_zero()) return "0";
  std::string s;
  const auto c = p.coefficients();
  for (std::size_t r = 0; r < c.size(); ++r) {
    if (c[r] == 0) continue;
    const bool neg = c[r] < 0;
    const BigInt mag = abs(c[r]);
    if (neg) s += '-';
    else if (!s.empty()) s += '+';
    if (r == 0 || mag != 1) s += mag.get_str();
    if (r >= 1) s += 'x';
    if (r >= 2) s += '^' + std::to_string(r);
  }
  return s;
}

// Inverse of to_string; also tolerates spaces and "*" ("4*x^2").
inline XPoly parse_xpoly(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '*') s += ch;
  if (s.empty()) throw InvalidInput("empty polynomial");
  std::vector<BigInt> coeffs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw InvalidInput("bad polynomial text: " + s);
    }
    std::size_t digits_end = pos;
    while (digits_end < s.size() && s[digits_end] >= '0' && s[digits_end] <= '9') ++digits_end;
    const bool has_digits = digits_end > pos;
    BigInt c = has_digits ? BigInt(s.substr(pos, digits_end - pos)) : BigInt(1);
    pos = digits_end;
    const bool has_x = pos < s.size() && s[pos] == 'x';
    if (!has_digits && !has_x) throw InvalidInput("bad polynomial text: " + s);
    std::size_t power = 0;
    if (has_x) {
      power = 1;
      ++pos;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t e_end = pos;
        while (e_end < s.size() && s[e_end] >= '0' && s[e_end] <= '9') ++e_end;
        if (e_end == pos || e_end - pos > 6) throw InvalidInput("bad exponent in: " + s);
        power = std::stoul(s.substr(pos, e_end - pos));
        pos = e_end;
      }
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1);
    coeffs[power] += neg ? BigInt(-c) : c;
  }
  return XPoly(std::move(coeffs));
}

}  // namespace mmp132

#endif  // MMP132_XPOLY_HPP_
