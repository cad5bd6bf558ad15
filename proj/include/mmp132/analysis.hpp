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

#ifndef MMP132_ANALYSIS_HPP_
#define MMP132_ANALYSIS_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mmp132/distribution.hpp"
#include "mmp132/errors.hpp"
#include "mmp132/generating_functions.hpp"
#include "mmp132/integer.hpp"
#include "mmp132/mesh_pattern.hpp"
#include "mmp132/permutation.hpp"
#include "mmp132/xpoly.hpp"

namespace mmp132 {

// Coefficient of x^r; zero above the degree.
inline BigInt coeff_x(const XPoly& p, long r) {
  if (r < 0) throw InvalidInput("coeff_x: exponent must be >= 0");
  return p.coeff(static_cast<std::size_t>(r));
}

// ---------------------------------------------------------------------------
// Sequence export

inline constexpr std::size_t kDefaultSequenceTerms = 12;

struct Transform {
  enum Kind { X0, XR, TopCoeff };
  Kind kind = X0;
  std::size_t r = 0;  // only for XR

  static Transform x0() { return {X0, 0}; }
  static Transform xr(std::size_t r) { return {XR, r}; }
  static Transform top() { return {TopCoeff, 0}; }

  BigInt apply(const XPoly& p) const {
    switch (kind) {
      case X0: return p.coeff(0);
      case XR: return p.coeff(r);
      case TopCoeff: return p.is_zero() ? BigInt(0) : p.leading();
    }
    return 0;
  }

  friend bool operator==(const Transform&, const Transform&) = default;
};

inline std::string to_string(const Transform& t) {
  switch (t.kind) {
    case Transform::X0: return "x0";
    case Transform::XR: return "x^" + std::to_string(t.r);
    case Transform::TopCoeff: return "top";
  }
  return "?";
}

// Accepts "x0", "x^R" and "top".
inline Transform parse_transform(std::string_view text) {
  if (text == "x0") return Transform::x0();
  if (text == "top") return Transform::top();
  if (text.size() > 2 && text.substr(0, 2) == "x^") {
    const std::string digits(text.substr(2));
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() <= 9)
      return Transform::xr(std::stoul(digits));
  }
  throw InvalidInput("bad transform '" + std::string(text) + "' (expected x0, x^R or top)");
}

struct SequenceExport {
  PatternKey pattern;
  Transform transform;
  std::size_t start = 1;
  std::vector<BigInt> values;
};

inline SequenceExport export_sequence(const PatternKey& pat, Transform tr, std::size_t n_max,
                                      std::size_t start = 1) {
  DistributionEngine engine;
  SequenceExport out{pat, tr, start, {}};
  for (std::size_t n = start; n <= n_max; ++n) out.values.push_back(tr.apply(engine.q_poly(n, pat)));
  return out;
}

// Q_n(0) for n = 1..n_max.
inline SequenceExport avoidance_sequence(const PatternKey& pat, std::size_t n_max) {
  return export_sequence(pat, Transform::x0(), n_max);
}

// x-degree and leading coefficient of Q_n.
inline std::pair<long, BigInt> top_coeff_report(const PatternKey& pat, std::size_t n) {
  const XPoly q = q_poly_recursive(n, pat);
  return {q.degree(), q.is_zero() ? BigInt(0) : q.leading()};
}

// Header `n,pattern,transform,value`. The pattern field contains commas and
// is quoted.
inline void write_csv_header(std::ostream& os) { os << "n,pattern,transform,value\n"; }

inline void write_csv_rows(std::ostream& os, const SequenceExport& s) {
  for (std::size_t k = 0; k < s.values.size(); ++k)
    os << (s.start + k) << ",\"" << to_string(s.pattern) << "\"," << to_string(s.transform) << ','
       << s.values[k].get_str() << '\n';
}

inline void write_rows(std::ostream& os, const SequenceExport& s) {
  for (std::size_t k = 0; k < s.values.size(); ++k)
    os << (s.start + k) << ',' << s.values[k].get_str() << '\n';
}

// ---------------------------------------------------------------------------
// Closed-form coefficient checks

struct ClosedFormCheck {
  enum Kind {
    Coefficient,     // coefficient of x^{r(n)} equals formula(n)
    TopCoefficient,  // additionally, x^{r(n)} is the highest power present
  };
  std::string name;
  PatternKey pattern;
  Kind kind = Coefficient;
  std::function<long(long)> selector;
  std::function<BigInt(long)> formula;
  long validity = 1;
  std::string note;
};

struct CheckOutcome {
  std::string name;
  bool passed = true;
  long first_n = 0;
  long last_n = 0;
  // Set on failure.
  long fail_n = 0;
  std::string expected;
  std::string got;
  std::string note;
};

inline CheckOutcome run_check(const ClosedFormCheck& c, long n_max, DistributionEngine& engine) {
  CheckOutcome out{c.name, true, c.validity, n_max, 0, {}, {}, c.note};
  for (long n = c.validity; n <= n_max; ++n) {
    const XPoly& q = engine.q_poly(static_cast<std::size_t>(n), c.pattern);
    const long r = c.selector(n);
    const BigInt want = c.formula(n);
    const BigInt have = coeff_x(q, r);
    const bool degree_ok = c.kind != ClosedFormCheck::TopCoefficient || q.degree() == r;
    if (have != want || !degree_ok) {
      out.passed = false;
      out.fail_n = n;
      out.expected = want.get_str() + "x^" + std::to_string(r);
      out.got = have.get_str() + "x^" + std::to_string(r);
      if (!degree_ok) out.got += " (degree " + std::to_string(q.degree()) + ")";
      return out;
    }
  }
  return out;
}

inline std::vector<CheckOutcome> check_closed_forms(const std::vector<ClosedFormCheck>& registry,
                                                    long n_max) {
  std::vector<CheckOutcome> out;
  out.reserve(registry.size());
  DistributionEngine engine;
  for (const auto& c : registry) out.push_back(run_check(c, n_max, engine));
  return out;
}

namespace detail {

inline BigInt C(long n) { return catalan(static_cast<std::uint64_t>(n)); }
inline BigInt binom(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}
inline BigInt pow2(long e) {
  BigInt r = 1;
  r <<= static_cast<mp_bitcnt_t>(e);
  return r;
}
inline std::string param(std::string_view base, std::string_view var, unsigned v) {
  return std::string(base) + ", " + std::string(var) + "=" + std::to_string(v);
}

}  // namespace detail

// The shipped coefficient registry. Families indexed by m, l or k are
// instantiated for parameters 1..max_param.
inline std::vector<ClosedFormCheck> closed_form_registry(unsigned max_param = 4) {
  using detail::binom;
  using detail::C;
  using detail::param;
  using K = ClosedFormCheck;
  std::vector<ClosedFormCheck> reg;
  auto add = [&](std::string name, PatternKey p, K::Kind kind, std::function<long(long)> sel,
                 std::function<BigInt(long)> f, long validity, std::string note = {}) {
    reg.push_back({std::move(name), p, kind, std::move(sel), std::move(f), validity, std::move(note)});
  };

  for (unsigned m = 1; m <= max_param; ++m) {
    const long M = m;
    add(param("(1,1,m,0) highest", "m", m), {1, 1, m, 0}, K::TopCoefficient,
        [M](long n) { return n - 2 - M; }, [M](long) -> BigInt { return 2 * C(M); }, 3 + M);
    add(param("(2,1,m,0) highest", "m", m), {2, 1, m, 0}, K::TopCoefficient,
        [M](long n) { return n - 3 - M; }, [M](long) -> BigInt { return 3 * C(M); }, 4 + M);
    add(param("(1,2,m,0) highest", "m", m), {1, 2, m, 0}, K::TopCoefficient,
        [M](long n) { return n - 3 - M; }, [M](long) -> BigInt { return 5 * C(M); }, 4 + M);
    add(param("(2,2,m,0) highest", "m", m), {2, 2, m, 0}, K::TopCoefficient,
        [M](long n) { return n - 4 - M; }, [M](long) -> BigInt { return 9 * C(M); }, 5 + M);
  }
  add("(1,1,1,0) second-highest", {1, 1, 1, 0}, K::Coefficient, [](long n) { return n - 4; },
      [](long n) -> BigInt { return 6 + 2 * binom(n - 2, 2); }, 5);
  for (unsigned m = 2; m <= max_param; ++m) {
    const long M = m;
    add(param("(1,1,m,0) second-highest", "m", m), {1, 1, m, 0}, K::Coefficient,
        [M](long n) { return n - 3 - M; },
        [M](long n) -> BigInt { return 2 * C(M + 1) + 8 * C(M) + 4 * C(M) * (n - 4 - M); }, 4 + M,
        "linear term is 4C_m(n-4-m); 4C_m(n-4) disagrees with the series");
  }

  for (unsigned l = 1; l <= max_param; ++l) {
    const long L = l;
    add(param("(0,1,l,1) highest", "l", l), {0, 1, l, 1}, K::TopCoefficient,
        [L](long n) { return n - 2 - L; }, [L](long) -> BigInt { return C(L); }, 3 + L);
    add(param("(0,1,l,2) highest", "l", l), {0, 1, l, 2}, K::TopCoefficient,
        [L](long n) { return n - 3 - L; }, [L](long) -> BigInt { return 2 * C(L); }, 4 + L);
    add(param("(0,2,l,2) highest", "l", l), {0, 2, l, 2}, K::TopCoefficient,
        [L](long n) { return n - 4 - L; }, [L](long) -> BigInt { return 4 * C(L); }, 5 + L,
        "highest power is x^{n-l-4}");
  }
  add("(0,1,1,1) second-highest", {0, 1, 1, 1}, K::Coefficient, [](long n) { return n - 4; },
      [](long n) -> BigInt { return 5 + binom(n - 2, 2); }, 5);
  add("(0,1,1,2) second-highest", {0, 1, 1, 2}, K::Coefficient, [](long n) { return n - 5; },
      [](long n) -> BigInt { return 13 + 2 * binom(n - 3, 2); }, 6,
      "13+2binom(n-3,2), fitted to the series and confirmed by the engine; "
      "13+binom(n-2,2) and 13+2binom(n-2,2) both disagree");
  for (unsigned l = 2; l <= max_param; ++l) {
    const long L = l;
    add(param("(0,1,l,1) second-highest", "l", l), {0, 1, l, 1}, K::Coefficient,
        [L](long n) { return n - 3 - L; },
        [L](long n) -> BigInt { return C(L + 1) + 6 * C(L) + 2 * C(L) * (n - 4 - L); }, 4 + L);
    add(param("(0,1,l,2) second-highest", "l", l), {0, 1, l, 2}, K::Coefficient,
        [L](long n) { return n - 4 - L; },
        [L](long n) -> BigInt { return 2 * C(L + 1) + 15 * C(L) + 4 * C(L) * (n - 5 - L); }, 5 + L);
  }

  add("(1,1,0,1) highest", {1, 1, 0, 1}, K::TopCoefficient, [](long n) { return n - 3; },
      [](long n) -> BigInt { return 4 * C(n - 3); }, 4,
      "4C_l C_{n-l-2} holds for l=1 only");
  add("(1,1,0,1) second-highest", {1, 1, 0, 1}, K::Coefficient, [](long n) { return n - 4; },
      [](long n) -> BigInt { return 8 * C(n - 3) + C(n - 4); }, 5);
  for (unsigned k = 1; k <= max_param; ++k) {
    const long Kp = k;
    add(param("(k,1,0,1) highest", "k", k), {k, 1, 0, 1}, K::TopCoefficient,
        [Kp](long n) { return n - Kp - 2; },
        [Kp](long n) -> BigInt { return BigInt((Kp + 1) * (Kp + 1)) * C(n - Kp - 2); }, Kp + 3);
    add(param("(k,1,1,1) highest", "k", k), {k, 1, 1, 1}, K::TopCoefficient,
        [Kp](long n) { return n - Kp - 3; }, [Kp](long) -> BigInt { return BigInt((Kp + 1) * (Kp + 1)); },
        Kp + 4);
  }
  add("(1,1,1,1) second-highest", {1, 1, 1, 1}, K::Coefficient, [](long n) { return n - 5; },
      [](long n) -> BigInt { return 17 + 4 * binom(n - 3, 2); }, 6,
      "17+4binom(n-3,2); 17+4binom(n-3,3) disagrees with the series");

  add("(1,1,0,1) x=0", {1, 1, 0, 1}, K::Coefficient, [](long) { return 0L; },
      [](long n) -> BigInt { return BigInt((n - 1) * (n - 1) + 1); }, 1);
  add("(0,1,1,1) x=0", {0, 1, 1, 1}, K::Coefficient, [](long) { return 0L; },
      [](long n) -> BigInt { return (n - 1) * detail::pow2(n - 2) + 1; }, 2);
  add("(0,1,1,1) x^1", {0, 1, 1, 1}, K::Coefficient, [](long) { return 1L; },
      [](long n) -> BigInt { return BigInt(n * n - 9 * n + 24) * detail::pow2(n - 3) - 3 - n; }, 3);
  return reg;
}

inline std::string format_check_report(const std::vector<CheckOutcome>& outcomes) {
  std::ostringstream os;
  std::size_t width = 4;
  for (const auto& o : outcomes) width = std::max(width, o.name.size());
  for (const auto& o : outcomes) {
    os << (o.passed ? "PASS  " : "FAIL  ") << o.name << std::string(width - o.name.size() + 2, ' ')
       << "n=" << o.first_n << ".." << o.last_n;
    if (!o.passed) os << "  first failure n=" << o.fail_n << " expected " << o.expected << " got " << o.got;
    if (!o.note.empty()) os << "  [" << o.note << "]";
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Classical-pattern equivalence

inline constexpr std::size_t kDefaultClassicalCap = 10;

struct EquivalenceRow {
  std::size_t n = 0;
  BigInt q_at_zero;
  BigInt classical_count;
  bool equal() const { return q_at_zero == classical_count; }
};

struct EquivalenceReport {
  PatternKey pattern;
  std::vector<EquivalenceRow> rows;
  bool all_equal() const {
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.equal(); });
  }
};

// Number of permutations of length n avoiding every pattern in `forbidden`,
// by a scan of all of S_n.
inline BigInt count_classical_avoiders(std::size_t n, const std::vector<Permutation>& forbidden,
                                       std::size_t cap = kDefaultClassicalCap) {
  detail::check_cap(n, cap);
  const Permutation p132({1, 3, 2});
  const bool has_132 = std::find(forbidden.begin(), forbidden.end(), p132) != forbidden.end();
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<int>(i + 1);
  BigInt count = 0;
  do {
    const Permutation p(v);
    if (has_132 && !avoids_132(p)) continue;
    bool ok = true;
    for (const auto& f : forbidden) {
      if (has_132 && f == p132) continue;
      if (contains_classical(p, f)) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

inline EquivalenceReport classical_equivalence_check(const PatternKey& pat,
                                                     const std::vector<Permutation>& forbidden,
                                                     std::size_t n_max,
                                                     std::size_t cap = kDefaultClassicalCap) {
  detail::check_cap(n_max, cap);
  EquivalenceReport rep{pat, {}};
  DistributionEngine engine;
  for (std::size_t n = 1; n <= n_max; ++n)
    rep.rows.push_back({n, engine.q_poly(n, pat).coeff(0), count_classical_avoiders(n, forbidden, cap)});
  return rep;
}

// ---------------------------------------------------------------------------
// Cross-validation of the three computation paths

struct CrossValidationReport {
  bool passed = true;
  std::size_t patterns = 0;
  std::size_t comparisons = 0;
  std::string discrepancy;  // first one found
};

// For every pattern with a+b+c+d <= entry_bound: brute force against the
// recursion for n <= n_max, the recursion against the identities through
// t^order, and Q^{(a,b,c,d)} = Q^{(a,d,c,b)} for n <= n_max.
inline CrossValidationReport cross_validate(unsigned entry_bound, std::size_t n_max,
                                            std::size_t order,
                                            MaxMatchRule rule = standard_max_match) {
  CrossValidationReport rep;
  DistributionEngine engine(rule);
  GfSolver gf(order);
  auto fail = [&](const PatternKey& p, const std::string& what) {
    rep.passed = false;
    rep.discrepancy = to_string(p) + ": " + what;
  };
  const std::vector<PatternKey> pats = patterns_up_to_total(entry_bound);
  rep.patterns = pats.size();
  for (const auto& p : pats)
    for (std::size_t n = 0; n <= n_max; ++n) {
      ++rep.comparisons;
      const XPoly brute = q_poly_bruteforce(n, p);
      const XPoly& rec = engine.q_poly(n, p);
      if (brute != rec) {
        fail(p, "n=" + std::to_string(n) + " bruteforce " + to_string(brute) + " recursion " +
                    to_string(rec));
        return rep;
      }
    }
  for (const auto& p : pats) {
    ++rep.comparisons;
    const TSeries rec_series = engine.q_series(p, order);
    const GfResult g = gf.dispatch(p);
    for (std::size_t n = 0; n <= order; ++n)
      if (g.series[n] != rec_series[n]) {
        fail(p, "t^" + std::to_string(n) + " recursion " + to_string(rec_series[n]) + " " +
                    std::string(route_name(g.request.route)) + " " + to_string(g.series[n]));
        return rep;
      }
  }
  for (const auto& p : pats)
    for (std::size_t n = 0; n <= n_max; ++n) {
      ++rep.comparisons;
      const XPoly& rec = engine.q_poly(n, p);
      const XPoly& rec_mirror = engine.q_poly(n, p.mirrored());
      if (rec != rec_mirror) {
        fail(p, "n=" + std::to_string(n) + " symmetry " + to_string(rec) + " vs " +
                    to_string(rec_mirror));
        return rep;
      }
    }
  return rep;
}

inline std::string format_cross_validation(const CrossValidationReport& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " patterns=" << r.patterns << " comparisons=" << r.comparisons;
  if (!r.passed) os << " first discrepancy " << r.discrepancy;
  os << '\n';
  return os.str();
}

}  // namespace mmp132

#endif  // MMP132_ANALYSIS_HPP_
