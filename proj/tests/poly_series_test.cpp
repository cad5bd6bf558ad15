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

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "mmp132/errors.hpp"
#include "mmp132/series.hpp"
#include "mmp132/xpoly.hpp"
#include "test_util.hpp"

namespace mmp132 {
namespace {

using testing::int_series;

XPoly poly(std::vector<long> c) {
  std::vector<BigInt> b(c.begin(), c.end());
  return XPoly(std::move(b));
}

// Random series with small integer coefficients of x-degree <= 2; the
// constant term is forced to `unit` when nonzero.
TSeries random_series(std::mt19937& rng, std::size_t order, long unit = 0) {
  std::uniform_int_distribution<long> dist(-5, 5);
  TSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s.set(n, poly({dist(rng), dist(rng), dist(rng)}));
  if (unit != 0) s.set(0, XPoly(unit));
  return s;
}

TEST(XPolyTest, CanonicalForm) {
  EXPECT_TRUE(XPoly().is_zero());
  EXPECT_TRUE(XPoly(0).is_zero());
  EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(XPoly().degree(), -1);
  const XPoly p = poly({1, 1}) - XPoly::x();
  EXPECT_EQ(p, XPoly(1));
  EXPECT_EQ(p.coefficients().size(), 1u);
  EXPECT_TRUE((XPoly::x() - XPoly::x()).is_zero());
  XPoly q = poly({3, 0, 5});
  q -= XPoly::monomial(5, 2);
  EXPECT_EQ(q.degree(), 0);
}

TEST(XPolyTest, Arithmetic) {
  const XPoly a = poly({1, 1});   // 1+x
  const XPoly b = poly({1, -1});  // 1-x
  EXPECT_EQ(a * b, poly({1, 0, -1}));
  EXPECT_EQ(a + b, XPoly(2));
  EXPECT_EQ(a.shifted(2), poly({0, 0, 1, 1}));
  EXPECT_EQ(poly({38, 4}).eval(1), 42);
  EXPECT_EQ(poly({99, 29, 4}).eval(0), 99);
  XPoly acc = XPoly(1);
  acc.add_product(a, a);
  EXPECT_EQ(acc, poly({2, 2, 1}));
  EXPECT_EQ(XPoly::monomial(0, 5), XPoly());
}

TEST(XPolyTest, TextRoundTrip) {
  EXPECT_EQ(to_string(poly({38, 4})), "38+4x");
  EXPECT_EQ(to_string(poly({99, 29, 4})), "99+29x+4x^2");
  EXPECT_EQ(to_string(poly({1, -1})), "1-x");
  EXPECT_EQ(to_string(XPoly()), "0");
  EXPECT_EQ(to_string(poly({0, 0, 2})), "2x^2");
  for (const char* s : {"38+4x", "99+29x+4x^2", "1-x", "0", "2x^2", "-3+x^3", "x", "-x"})
    EXPECT_EQ(to_string(parse_xpoly(s)), s);
}

TEST(XPolyTest, ParseRejects) {
  for (const char* bad : {"", "+", "x^", "3y", "1++x", "x^-1"}) EXPECT_THROW(parse_xpoly(bad), InvalidInput) << bad;
}

TEST(SeriesAddTest, Examples) {
  const TSeries u = int_series(3, {1, 1});
  const TSeries v = int_series(3, {1, -1});
  EXPECT_EQ(series_add(u, v), int_series(3, {2}));
  EXPECT_EQ(series_add(u, TSeries(3)), u);
  const TSeries c = catalan_series(2);
  EXPECT_EQ(series_add(c, c), int_series(2, {2, 2, 4}));
}

TEST(SeriesAddTest, OrderMismatch) {
  EXPECT_THROW(series_add(TSeries(2), TSeries(3)), InvalidInput);
  EXPECT_THROW(series_mul(TSeries(2), TSeries(3)), InvalidInput);
}

TEST(SeriesMulTest, Examples) {
  EXPECT_EQ(series_mul(int_series(2, {1, 1}), int_series(2, {1, -1})), int_series(2, {1, 0, -1}));
  const TSeries c = catalan_series(3);
  EXPECT_EQ(series_mul(c, c), int_series(3, {1, 2, 5, 14}));
  const TSeries xt = TSeries::monomial(2, XPoly::x(), 1);
  TSeries want(2);
  want.set(1, XPoly::x());
  want.set(2, XPoly::monomial(1, 2));
  EXPECT_EQ(series_mul(xt, catalan_xt_series(2)), want);
}

TEST(SeriesMulTest, RingAxioms) {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 40; ++trial) {
    const TSeries a = random_series(rng, 6), b = random_series(rng, 6), c = random_series(rng, 6);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * TSeries::one(6), a);
    EXPECT_EQ(a - a, TSeries(6));
  }
}

TEST(SeriesReciprocalTest, Examples) {
  EXPECT_EQ(series_reciprocal(int_series(4, {1, -1})), int_series(4, {1, 1, 1, 1, 1}));
  const TSeries c = catalan_series(4);
  EXPECT_EQ(series_reciprocal(TSeries::one(4) - c.shifted()), int_series(4, {1, 1, 2, 5, 14}));
  EXPECT_EQ(series_reciprocal(int_series(3, {-1})), int_series(3, {-1}));
}

TEST(SeriesReciprocalTest, NonUnitRejected) {
  EXPECT_THROW(series_reciprocal(int_series(3, {2, 1})), InvalidInput);
  EXPECT_THROW(series_reciprocal(TSeries(3)), InvalidInput);
  TSeries xconst(3);
  xconst.set(0, XPoly::x());
  EXPECT_THROW(series_reciprocal(xconst), InvalidInput);
}

TEST(SeriesReciprocalTest, InverseAndInvolution) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const TSeries u = random_series(rng, 8, trial % 2 ? 1 : -1);
    const TSeries v = series_reciprocal(u);
    EXPECT_EQ(u * v, TSeries::one(8));
    EXPECT_EQ(series_reciprocal(v), u);
  }
}

TEST(CatalanSeriesTest, Examples) {
  EXPECT_EQ(catalan_series(5), int_series(5, {1, 1, 2, 5, 14, 42}));
  EXPECT_EQ(catalan_series(0), int_series(0, {1}));
  const TSeries c = catalan_series(15);
  EXPECT_EQ(c, TSeries::one(15) + (c * c).shifted());
}

TEST(CatalanSeriesTest, PartialSums) {
  EXPECT_EQ(catalan_partial_sum(1, 3, 5), int_series(5, {0, 1, 2, 5}));
  EXPECT_EQ(catalan_partial_sum(0, -1, 5), TSeries(5));
  EXPECT_EQ(catalan_partial_sum(0, 9, 2), catalan_series(2));
}

TEST(CatalanXtSeriesTest, Examples) {
  const TSeries s = catalan_xt_series(6);
  EXPECT_EQ(s[3], XPoly::monomial(5, 3));
  EXPECT_EQ(s[0], XPoly(1));
  EXPECT_EQ(s.at_x(1), catalan_series(6));
}

TEST(SolveQ00k0Test, Examples) {
  EXPECT_EQ(solve_q00k0(1, 6).at_x(0), int_series(6, {1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(solve_q00k0(1, 5)[3], poly({1, 3, 1}));
  for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(solve_q00k0(k, 5)[0], XPoly(1));
  EXPECT_THROW(solve_q00k0(0, 5), InvalidInput);
}

TEST(SolveQ00k0Test, SatisfiesQuadratic) {
  const std::size_t order = 14;
  for (unsigned k = 1; k <= 5; ++k) {
    const TSeries q = solve_q00k0(k, order);
    const TSeries xt = TSeries::monomial(order, XPoly::x(), 1);
    const TSeries d = TSeries::one(order) +
                      (XPoly::x() - XPoly(1)) * catalan_partial_sum(0, k - 1L, order).shifted();
    const TSeries residual = xt * q * q - d * q + TSeries::one(order);
    EXPECT_EQ(residual, TSeries(order)) << "k=" << k;
    EXPECT_EQ(q.at_x(1), catalan_series(order));
  }
}

TEST(SolveQ00k0Test, AtZeroIsReciprocalOfPartialSum) {
  const std::size_t order = 12;
  for (unsigned k = 1; k <= 4; ++k) {
    const TSeries want =
        series_reciprocal(TSeries::one(order) - catalan_partial_sum(0, k - 1L, order).shifted());
    EXPECT_EQ(solve_q00k0(k, order).at_x(0), want);
  }
}

TEST(SeriesTextTest, Format) {
  EXPECT_EQ(to_string(int_series(2, {1, 1, 2})), "t^0: 1\nt^1: 1\nt^2: 2\n");
}

TEST(SeriesTest, ShiftAndMonomial) {
  EXPECT_EQ(int_series(3, {1, 2, 3, 4}).shifted(), int_series(3, {0, 1, 2, 3}));
  EXPECT_EQ(int_series(3, {1, 2}).shifted(5), TSeries(3));
  EXPECT_EQ(TSeries::monomial(3, XPoly(7), 9), TSeries(3));
  EXPECT_EQ(TSeries(3, std::vector<XPoly>(10, XPoly(1))).order(), 3u);
}

}  // namespace
}  // namespace mmp132
