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

#ifndef MMP132_GENERATING_FUNCTIONS_HPP_
#define MMP132_GENERATING_FUNCTIONS_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "mmp132/distribution.hpp"
#include "mmp132/errors.hpp"
#include "mmp132/integer.hpp"
#include "mmp132/series.hpp"

namespace mmp132 {

// Which closed generating-function identity produces a series.
enum class Route {
  T2_K000,   // Q^{(k,0,0,0)}: C(xt), then 1 / (1 - t Q^{(k-1,0,0,0)})
  T3_00K0,   // Q^{(0,0,k,0)}: quadratic with Catalan partial sum
  T4_K0L0,   // Q^{(k,0,l,0)} = 1 / (1 - t Q^{(k-1,0,l,0)})
  T5_K00L,   // Q^{(k,0,0,l)}
  T6_0KL0,   // Q^{(0,k,l,0)}
  T7_0K0L,   // Q^{(0,k,0,l)} = Phi_{k,l} / (1 - t)
  NEW_KLM0,  // Q^{(k,l,m,0)}
  NEW_0KLM,  // Q^{(0,k,l,m)}
  NEW_LK0M,  // Q^{(l,k,0,m)}
  NEW_ABCD,  // Q^{(a,b,c,d)}, all positive
  BASE_ENGINE,
};

inline std::string_view route_name(Route r) {
  switch (r) {
    case Route::T2_K000: return "T2_K000";
    case Route::T3_00K0: return "T3_00K0";
    case Route::T4_K0L0: return "T4_K0L0";
    case Route::T5_K00L: return "T5_K00L";
    case Route::T6_0KL0: return "T6_0KL0";
    case Route::T7_0K0L: return "T7_0K0L";
    case Route::NEW_KLM0: return "NEW_KLM0";
    case Route::NEW_0KLM: return "NEW_0KLM";
    case Route::NEW_LK0M: return "NEW_LK0M";
    case Route::NEW_ABCD: return "NEW_ABCD";
    case Route::BASE_ENGINE: return "BASE_ENGINE";
  }
  return "?";
}

// A routed request. `normalized` is the pattern the identity is applied to;
// it differs from `pat` only by the mirror (a,b,c,d) -> (a,d,c,b).
struct GfRequest {
  PatternKey pat;
  std::size_t order = kDefaultOrder;
  Route route = Route::BASE_ENGINE;
  PatternKey normalized;
};

// Chooses the identity by which coordinates are zero.
inline GfRequest plan_request(const PatternKey& pat, std::size_t order) {
  const bool a = pat.a > 0, b = pat.b > 0, c = pat.c > 0, d = pat.d > 0;
  GfRequest req{pat, order, Route::BASE_ENGINE, pat};
  auto use = [&](Route r, PatternKey p) {
    req.route = r;
    req.normalized = p;
  };
  const PatternKey mir = pat.mirrored();
  if (!b && !c && !d) use(Route::T2_K000, pat);
  else if (!a && !b && c && !d) use(Route::T3_00K0, pat);
  else if (a && !b && c && !d) use(Route::T4_K0L0, pat);
  else if (a && !b && !c && d) use(Route::T5_K00L, pat);
  else if (a && b && !c && !d) use(Route::T5_K00L, mir);
  else if (!a && b && c && !d) use(Route::T6_0KL0, pat);
  else if (!a && !b && c && d) use(Route::T6_0KL0, mir);
  else if (!a && b && !c && d) use(Route::T7_0K0L, pat);
  else if (a && b && c && !d) use(Route::NEW_KLM0, pat);
  else if (a && !b && c && d) use(Route::NEW_KLM0, mir);
  else if (!a && b && c && d) use(Route::NEW_0KLM, pat);
  else if (a && b && !c && d) use(Route::NEW_LK0M, pat);
  else if (a && b && c && d) use(Route::NEW_ABCD, pat);
  // (0,k,0,0) and (0,0,0,k) have no identity here.
  return req;
}

struct GfResult {
  GfRequest request;
  TSeries series;
};

// Generating functions Q^{(a,b,c,d)}(t,x), truncated at a fixed order,
// built from the closed identities. Subseries are memoized per instance;
// the identities revisit the same subproblems many times. Not thread-safe.
//
// Q^{(0,k,0,0)} and Q^{(0,0,0,l)}, which the Q^{(k,0,0,l)} and Q^{(0,k,0,l)}
// identities need as inputs, come from the structural recursion.
class GfSolver {
 public:
  explicit GfSolver(std::size_t order = kDefaultOrder) : order_(order) {}

  std::size_t order() const { return order_; }

  GfResult dispatch(const PatternKey& pat) {
    GfRequest req = plan_request(pat, order_);
    const PatternKey& p = req.normalized;
    switch (req.route) {
      case Route::T2_K000: return {req, gf_k000(p.a)};
      case Route::T3_00K0: return {req, gf_00k0(p.c)};
      case Route::T4_K0L0: return {req, gf_k0l0(p.a, p.c)};
      case Route::T5_K00L: return {req, gf_k00l(p.a, p.d)};
      case Route::T6_0KL0: return {req, gf_0kl0(p.b, p.c)};
      case Route::T7_0K0L: return {req, gf_0k0l(p.b, p.d)};
      case Route::NEW_KLM0: return {req, gf_klm0(p.a, p.b, p.c)};
      case Route::NEW_0KLM: return {req, gf_0klm(p.b, p.c, p.d)};
      case Route::NEW_LK0M: return {req, gf_lk0m(p.a, p.b, p.d)};
      case Route::NEW_ABCD: return {req, gf_abcd(p.a, p.b, p.c, p.d)};
      case Route::BASE_ENGINE: break;
    }
    return {req, base(p)};
  }

  // Q^{(0,0,0,0)} = C(xt);  Q^{(k,0,0,0)} = 1 / (1 - t Q^{(k-1,0,0,0)}).
  const TSeries& gf_k000(unsigned k) {
    return memo(Route::T2_K000, {k, 0, 0, 0}, [&] {
      if (k == 0) return catalan_xt_series(order_);
      return series_reciprocal(one() - gf_k000(k - 1).shifted());
    });
  }

  const TSeries& gf_00k0(unsigned k) {
    if (k == 0) throw InvalidInput("gf_00k0: k must be >= 1");
    return memo(Route::T3_00K0, {0, 0, k, 0}, [&] { return solve_q00k0(k, order_); });
  }

  // Q^{(k,0,l,0)} = 1 / (1 - t Q^{(k-1,0,l,0)}).
  const TSeries& gf_k0l0(unsigned k, unsigned l) {
    if (l == 0) throw InvalidInput("gf_k0l0: l must be >= 1");
    if (k == 0) return gf_00k0(l);
    return memo(Route::T4_K0L0, {k, 0, l, 0}, [&] {
      return series_reciprocal(one() - gf_k0l0(k - 1, l).shifted());
    });
  }

  // Q^{(k,0,0,l)} = [C_l t^l + sum_{j<l} C_j t^j (D + t(Q^{(k-1,0,0,l-j)} - S_{0..l-j-1}))] / D
  // with D = 1 - t Q^{(k-1,0,0,0)}.
  const TSeries& gf_k00l(unsigned k, unsigned l) {
    if (k == 0 || l == 0) throw InvalidInput("gf_k00l: k, l must be >= 1");
    return memo(Route::T5_K00L, {k, 0, 0, l}, [&] {
      const TSeries den = one() - gf_k000(k - 1).shifted();
      TSeries num = cterm(l);
      for (unsigned j = 0; j < l; ++j) {
        const TSeries inner =
            k >= 2 ? gf_k00l(k - 1, l - j) : base({0, 0, 0, l - j});
        num += cterm(j) * (den + (inner - csum(0, L(l) - j - 1)).shifted());
      }
      return num * series_reciprocal(den);
    });
  }

  // Q^{(0,k,l,0)} = [C_{k-1} t^{k-1}
  //                  + sum_{j=0}^{k-2} C_j t^j (D + t(Q^{(0,k-j-1,l,0)} - S_{0..k-j-2}))] / D
  // with D = 1 - t Q^{(0,0,l,0)}. The inner index of the summand is the
  // summation variable j.
  const TSeries& gf_0kl0(unsigned k, unsigned l) {
    if (k == 0 || l == 0) throw InvalidInput("gf_0kl0: k, l must be >= 1");
    return memo(Route::T6_0KL0, {0, k, l, 0}, [&] {
      const TSeries den = one() - gf_00k0(l).shifted();
      TSeries num = cterm(k - 1);
      for (unsigned j = 0; j + 2 <= k; ++j)
        num += cterm(j) * (den + (gf_0kl0(k - j - 1, l) - csum(0, L(k) - j - 2)).shifted());
      return num * series_reciprocal(den);
    });
  }

  // Q^{(0,k,0,l)} = Phi_{k,l} / (1 - t), where (checked against the
  // recursion for k, l <= 4)
  //   Phi = S_{0..k+l-1} - t S_{0..k+l-2}
  //       + t sum_{j=0}^{k-2} C_j t^j (Q^{(0,k-j-1,0,l)} - S_{0..k-j+l-2})
  //       + t (Q^{(0,k,0,0)} - S_{0..k-2}) (Q^{(0,0,0,l)} - S_{0..l-1})
  //       + t sum_{j=1}^{l-1} C_j t^j (Q^{(0,k,0,l-j)} - S_{0..k+l-j-2}).
  const TSeries& gf_0k0l(unsigned k, unsigned l) {
    if (k == 0 || l == 0) throw InvalidInput("gf_0k0l: k, l must be >= 1");
    return memo(Route::T7_0K0L, {0, k, 0, l}, [&] {
      TSeries acc(order_);
      for (unsigned j = 0; j + 2 <= k; ++j)
        acc += cterm(j) * (gf_0k0l(k - j - 1, l) - csum(0, L(k) - j + l - 2));
      acc += (base({0, k, 0, 0}) - csum(0, L(k) - 2)) * (base({0, 0, 0, l}) - csum(0, L(l) - 1));
      for (unsigned j = 1; j < l; ++j)
        acc += cterm(j) * (gf_0k0l(k, l - j) - csum(0, L(k) + l - j - 2));
      const TSeries phi = csum(0, L(k) + l - 1) - csum(0, L(k) + l - 2).shifted() + acc.shifted();
      return phi * one_over_one_minus_t();
    });
  }

  // Phi_{k,l} / (1 - t) with Phi transcribed term for term from the
  // classical statement: the first correction sum uses Q^{(0,k,0,l-j-1)}
  // and S_{0..k-j-2}, the product term subtracts S_{0..k-1}. Every inner Q
  // comes from the structural recursion. This does not reproduce
  // Q^{(0,k,0,l)}, already at k = l = 1; kept for comparison only.
  TSeries gf_0k0l_as_displayed(unsigned k, unsigned l) {
    if (k == 0 || l == 0) throw InvalidInput("gf_0k0l: k, l must be >= 1");
    TSeries acc(order_);
    for (unsigned j = 0; j + 2 <= k; ++j) {
      const unsigned dd = j + 1 >= l ? 0 : l - j - 1;
      acc += cterm(j) * (base({0, k, 0, dd}) - csum(0, L(k) - j - 2));
    }
    acc += (base({0, k, 0, 0}) - csum(0, L(k) - 1)) * (base({0, 0, 0, l}) - csum(0, L(l) - 1));
    for (unsigned j = 1; j < l; ++j)
      acc += cterm(j) * (base({0, k, 0, l - j}) - csum(0, L(k) + l - j - 2));
    const TSeries phi = csum(0, L(k) + l - 1) - csum(0, L(k) + l - 2).shifted() + acc.shifted();
    return phi * one_over_one_minus_t();
  }

  // Q^{(k,l,m,0)} = C_{l-1} t^{l-1} + t Q^{(k,0,m,0)} Q^{(k-1,l,m,0)}
  //   + sum_{s=0}^{l-2} C_s t^s (1 + t Q^{(k,l-1-s,m,0)} - t Q^{(k,0,m,0)} - t S_{0..l-2-s}).
  // k = 0 is Q^{(0,l,m,0)}.
  const TSeries& gf_klm0(unsigned k, unsigned l, unsigned m) {
    if (l == 0 || m == 0) throw InvalidInput("gf_klm0: l, m must be >= 1");
    if (k == 0) return gf_0kl0(l, m);
    return memo(Route::NEW_KLM0, {k, l, m, 0}, [&] {
      const TSeries& side = gf_k0l0(k, m);
      TSeries r = cterm(l - 1) + (side * gf_klm0(k - 1, l, m)).shifted();
      for (unsigned s = 0; s + 2 <= l; ++s)
        r += cterm(s) * (one() + (gf_klm0(k, l - 1 - s, m) - side - csum(0, L(l) - 2 - s)).shifted());
      return r;
    });
  }

  // Q^{(0,k,l,m)} = S_{0..k+m-2} + C_{k+m-1} t^{k+m-1} / (1-t)
  //   + t/(1-t) [ sum_{i=0}^{k-2} C_i t^i (Q^{(0,k-1-i,l,m)} - S_{0..k-i+m-2})
  //             + (Q^{(0,k,l,0)} - S_{0..k-2}) (Q^{(0,0,l,m)} - S_{0..m-1})
  //             + sum_{j=1}^{m-1} C_j t^j (Q^{(0,k,l,m-j)} - S_{0..k+m-j-2}) ],
  // where Q^{(0,0,l,m)} = Q^{(0,m,l,0)}.
  const TSeries& gf_0klm(unsigned k, unsigned l, unsigned m) {
    if (k == 0 || l == 0 || m == 0) throw InvalidInput("gf_0klm: k, l, m must be >= 1");
    return memo(Route::NEW_0KLM, {0, k, l, m}, [&] {
      TSeries acc(order_);
      for (unsigned i = 0; i + 2 <= k; ++i)
        acc += cterm(i) * (gf_0klm(k - 1 - i, l, m) - csum(0, L(k) - i + m - 2));
      acc += (gf_0kl0(k, l) - csum(0, L(k) - 2)) * (gf_0kl0(m, l) - csum(0, L(m) - 1));
      for (unsigned j = 1; j < m; ++j)
        acc += cterm(j) * (gf_0klm(k, l, m - j) - csum(0, L(k) + m - j - 2));
      return csum(0, L(k) + m - 2) +
             (cterm(k + m - 1) + acc.shifted()) * one_over_one_minus_t();
    });
  }

  // Q^{(l,k,0,m)} = S_{0..k+m-1}
  //   + t sum_{i=0}^{k-2} C_i t^i (Q^{(l,k-1-i,0,m)} - S_{0..k-i+m-2})
  //   + t (Q^{(l-1,k,0,0)} - S_{0..k-2}) (Q^{(l,0,0,m)} - S_{0..m-1})
  //   + t sum_{j=0}^{m-1} C_j t^j (Q^{(l-1,k,0,m-j)} - S_{0..k+m-j-2}),
  // where Q^{(l-1,k,0,0)} = Q^{(l-1,0,0,k)}. l = 0 is Q^{(0,k,0,m)}.
  const TSeries& gf_lk0m(unsigned l, unsigned k, unsigned m) {
    if (k == 0 || m == 0) throw InvalidInput("gf_lk0m: k, m must be >= 1");
    if (l == 0) return gf_0k0l(k, m);
    return memo(Route::NEW_LK0M, {l, k, 0, m}, [&] {
      TSeries acc(order_);
      for (unsigned i = 0; i + 2 <= k; ++i)
        acc += cterm(i) * (gf_lk0m(l, k - 1 - i, m) - csum(0, L(k) - i + m - 2));
      const TSeries side = l >= 2 ? gf_k00l(l - 1, k) : base({0, k, 0, 0});
      acc += (side - csum(0, L(k) - 2)) * (gf_k00l(l, m) - csum(0, L(m) - 1));
      for (unsigned j = 0; j < m; ++j)
        acc += cterm(j) * (gf_lk0m(l - 1, k, m - j) - csum(0, L(k) + m - j - 2));
      return csum(0, L(k) + m - 1) + acc.shifted();
    });
  }

  // Q^{(a,b,c,d)} = S_{0..b+d-1}
  //   + t sum_{i=0}^{b-2} C_i t^i (Q^{(a,b-1-i,c,d)} - S_{0..b-i+d-2})
  //   + t (Q^{(a-1,b,c,0)} - S_{0..b-2}) (Q^{(a,0,c,d)} - S_{0..d-1})
  //   + t sum_{j=0}^{d-1} C_j t^j (Q^{(a-1,b,c,d-j)} - S_{0..b+d-j-2}),
  // where Q^{(a,0,c,d)} = Q^{(a,d,c,0)}. a = 0 is Q^{(0,b,c,d)}.
  const TSeries& gf_abcd(unsigned a, unsigned b, unsigned c, unsigned d) {
    if (b == 0 || c == 0 || d == 0) throw InvalidInput("gf_abcd: b, c, d must be >= 1");
    if (a == 0) return gf_0klm(b, c, d);
    return memo(Route::NEW_ABCD, {a, b, c, d}, [&] {
      TSeries acc(order_);
      for (unsigned i = 0; i + 2 <= b; ++i)
        acc += cterm(i) * (gf_abcd(a, b - 1 - i, c, d) - csum(0, L(b) - i + d - 2));
      acc += (gf_klm0(a - 1, b, c) - csum(0, L(b) - 2)) * (gf_klm0(a, d, c) - csum(0, L(d) - 1));
      for (unsigned j = 0; j < d; ++j)
        acc += cterm(j) * (gf_abcd(a - 1, b, c, d - j) - csum(0, L(b) + d - j - 2));
      return csum(0, L(b) + d - 1) + acc.shifted();
    });
  }

  // Structural-recursion series, for shapes without an identity.
  const TSeries& base(const PatternKey& p) {
    return memo(Route::BASE_ENGINE, {p.a, p.b, p.c, p.d},
                [&] { return engine_.q_series(p, order_); });
  }

 private:
  static long L(unsigned v) { return static_cast<long>(v); }

  TSeries one() const { return TSeries::one(order_); }
  // C_j t^j.
  TSeries cterm(unsigned j) const { return TSeries::monomial(order_, XPoly(catalan(j)), j); }
  TSeries csum(long lo, long hi) const { return catalan_partial_sum(lo, hi, order_); }
  TSeries one_over_one_minus_t() const { return TSeries(order_, std::vector<XPoly>(order_ + 1, XPoly(1))); }

  template <class Make>
  const TSeries& memo(Route r, std::array<unsigned, 4> params, Make&& make) {
    const auto key = std::make_pair(r, params);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    TSeries value = make();
    return memo_.emplace(key, std::move(value)).first->second;
  }

  std::size_t order_;
  DistributionEngine engine_;
  std::map<std::pair<Route, std::array<unsigned, 4>>, TSeries> memo_;
};

inline TSeries gf_dispatch(const PatternKey& pat, std::size_t order) {
  GfSolver solver(order);
  return solver.dispatch(pat).series;
}

}  // namespace mmp132

#endif  // MMP132_GENERATING_FUNCTIONS_HPP_
