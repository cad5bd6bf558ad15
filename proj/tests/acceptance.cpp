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

// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons
// throughout. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "mmp132/mmp132.hpp"

namespace {

using namespace mmp132;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct GoldenSeries {
  PatternKey pat;
  std::vector<std::pair<std::size_t, XPoly>> terms;
};

std::vector<GoldenSeries> load_golden(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".txt") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  const std::regex name_re(R"(q_(\d+)_(\d+)_(\d+)_(\d+))");
  const std::regex line_re(R"(t\^(\d+):\s*(.+))");
  std::vector<GoldenSeries> out;
  for (const auto& f : files) {
    std::smatch m;
    const std::string stem = f.stem().string();
    if (!std::regex_match(stem, m, name_re)) continue;
    GoldenSeries g{{static_cast<unsigned>(std::stoul(m[1])), static_cast<unsigned>(std::stoul(m[2])),
                    static_cast<unsigned>(std::stoul(m[3])), static_cast<unsigned>(std::stoul(m[4]))},
                   {}};
    std::ifstream in(f);
    std::string line;
    while (std::getline(in, line)) {
      std::smatch lm;
      if (std::regex_match(line, lm, line_re))
        g.terms.emplace_back(std::stoul(lm[1]), parse_xpoly(lm[2].str()));
    }
    out.push_back(std::move(g));
  }
  return out;
}

// 1. Printed series through the identities.
Verdict printed_series() {
  const auto golden = load_golden(MMP132_GOLDEN_DIR);
  std::size_t terms = 0;
  std::vector<std::string> bad;
  for (const auto& g : golden) {
    std::size_t order = 0;
    for (const auto& [n, p] : g.terms) order = std::max(order, n);
    GfSolver gf(order);
    const TSeries s = gf.dispatch(g.pat).series;
    for (const auto& [n, printed] : g.terms) {
      ++terms;
      if (s[n] != printed) {
        std::ostringstream os;
        os << to_string(g.pat) << " t^" << n << " printed " << to_string(printed) << " computed "
           << to_string(s[n]);
        if (printed.eval(1) != catalan(n))
          os << " (printed coefficients sum to " << printed.eval(1).get_str() << ", not C_" << n
             << " = " << catalan(n).get_str() << ")";
        bad.push_back(os.str());
      }
    }
  }
  Verdict v;
  std::ostringstream os;
  os << golden.size() << " series, " << terms << " coefficients";
  if (golden.size() < 12) {
    v.pass = false;
    os << "; golden data missing";
  }
  if (!bad.empty()) {
    v.pass = false;
    os << "; " << bad.size() << " differ:";
    for (const auto& b : bad) os << " [" << b << "]";
  }
  v.detail = os.str();
  return v;
}

// 2. Brute force = recursion = identities.
Verdict triple_agreement() {
  const auto r = cross_validate(5, 9, 10);
  Verdict v{r.passed && r.patterns >= 120, {}};
  v.detail = std::to_string(r.patterns) + " pattern classes, " + std::to_string(r.comparisons) +
             " comparisons" + (r.passed ? "" : "; " + r.discrepancy);
  return v;
}

// 3. x = 0 closed forms.
Verdict x_zero_forms() {
  Verdict v;
  DistributionEngine engine;
  for (long n = 1; n <= 20; ++n) {
    const BigInt a = engine.q_poly(n, {1, 1, 0, 1}).coeff(0);
    if (a != BigInt((n - 1) * (n - 1) + 1)) {
      v.pass = false;
      v.detail += "(1,1,0,1) n=" + std::to_string(n) + " got " + a.get_str() + "; ";
    }
    BigInt want = 1;
    if (n >= 2) {
      BigInt p = 1;
      p <<= static_cast<mp_bitcnt_t>(n - 2);
      want += (n - 1) * p;
    }
    const BigInt b = engine.q_poly(n, {0, 1, 1, 1}).coeff(0);
    if (b != want) {
      v.pass = false;
      v.detail += "(0,1,1,1) n=" + std::to_string(n) + " got " + b.get_str() + "; ";
    }
  }
  const std::size_t order = 20;
  auto lin = [&](std::vector<long> c) {
    std::vector<XPoly> coeffs;
    for (long x : c) coeffs.emplace_back(x);
    return TSeries(order, coeffs);
  };
  const TSeries one_minus_2t = lin({1, -2});
  const TSeries den = lin({1, -1}) * one_minus_2t * one_minus_2t * one_minus_2t;
  const TSeries want = lin({1, -6, 13, -11, 3, -2, 1}) * series_reciprocal(den);
  const TSeries rec = engine.q_series({1, 1, 1, 1}, order).at_x(0);
  GfSolver gf(order);
  const TSeries ident = gf.dispatch({1, 1, 1, 1}).series.at_x(0);
  if (rec != want || ident != want) {
    v.pass = false;
    v.detail += "(1,1,1,1) rational function mismatch; ";
  }
  if (v.pass) v.detail = "n=1..20 for both sequences, rational function through t^20";
  return v;
}

// 4. Coefficient registry.
Verdict coefficient_theorems() {
  const auto outcomes = check_closed_forms(closed_form_registry(), 25);
  Verdict v;
  std::size_t failed = 0;
  for (const auto& o : outcomes)
    if (!o.passed) {
      ++failed;
      v.pass = false;
      v.detail += o.name + " n=" + std::to_string(o.fail_n) + " expected " + o.expected + " got " +
                  o.got + "; ";
    }
  v.detail = std::to_string(outcomes.size()) + " checks to n=25, " + std::to_string(failed) +
             " failed" + (v.pass ? "" : ": " + v.detail);
  return v;
}

// 5. Classical equivalences.
Verdict classical() {
  Verdict v;
  auto P = [](const char* s) { return parse_permutation(s); };
  const auto r1 = classical_equivalence_check({1, 1, 1, 0}, {P("132"), P("3124"), P("4123")}, 9);
  const auto r2 = classical_equivalence_check(
      {1, 1, 1, 1}, {P("132"), P("52314"), P("52341"), P("42315"), P("42351")}, 9);
  for (const auto* r : {&r1, &r2})
    for (const auto& row : r->rows)
      if (!row.equal()) {
        v.pass = false;
        v.detail += to_string(r->pattern) + " n=" + std::to_string(row.n) + " " +
                    row.q_at_zero.get_str() + " vs " + row.classical_count.get_str() + "; ";
      }
  if (v.pass)
    v.detail = "n=1..9; n=9 counts " + r1.rows.back().classical_count.get_str() + " and " +
               r2.rows.back().classical_count.get_str();
  return v;
}

// 6. Invariants.
Verdict invariants() {
  Verdict v;
  std::size_t checked = 0;
  for (unsigned a = 0; a <= 3; ++a)
    for (unsigned b = 0; b <= 3; ++b)
      for (unsigned c = 0; c <= 3; ++c)
        for (unsigned d = 0; d <= 3; ++d) {
          DistributionEngine engine;
          const PatternKey p{a, b, c, d};
          for (std::size_t n = 0; n <= 25; ++n) {
            ++checked;
            if (engine.q_poly(n, p).eval(1) != catalan(n)) {
              v.pass = false;
              v.detail += "mass " + to_string(p) + " n=" + std::to_string(n) + "; ";
            }
            if (n <= 12 && engine.q_poly(n, p) != engine.q_poly(n, p.mirrored())) {
              v.pass = false;
              v.detail += "symmetry " + to_string(p) + " n=" + std::to_string(n) + "; ";
            }
          }
        }
  std::size_t perms = 0;
  for (std::size_t n = 0; n <= 7; ++n) {
    std::vector<int> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<int>(i + 1);
    do {
      ++perms;
      const Permutation p(w);
      const Permutation inv = inverse(p);
      std::size_t cnt[3][3][3][3];
      for (unsigned a = 0; a < 3; ++a)
        for (unsigned b = 0; b < 3; ++b)
          for (unsigned c = 0; c < 3; ++c)
            for (unsigned d = 0; d < 3; ++d) {
              cnt[a][b][c][d] = mmp_count(p, MmpPattern::nat(a, b, c, d));
              if (cnt[a][b][c][d] != mmp_count(inv, MmpPattern::nat(a, d, c, b))) {
                v.pass = false;
                v.detail = "inverse identity at " + to_string(p) + "; ";
              }
            }
      for (unsigned a = 0; a < 3; ++a)
        for (unsigned b = 0; b < 3; ++b)
          for (unsigned c = 0; c < 3; ++c)
            for (unsigned d = 0; d < 3; ++d) {
              const std::size_t x = cnt[a][b][c][d];
              if ((a < 2 && cnt[a + 1][b][c][d] > x) || (b < 2 && cnt[a][b + 1][c][d] > x) ||
                  (c < 2 && cnt[a][b][c + 1][d] > x) || (d < 2 && cnt[a][b][c][d + 1] > x)) {
                v.pass = false;
                v.detail = "monotonicity at " + to_string(p) + "; ";
              }
            }
    } while (std::next_permutation(w.begin(), w.end()));
  }
  if (v.pass)
    v.detail = std::to_string(checked) + " (pattern, n) mass checks, symmetry to n=12, " +
               std::to_string(perms) + " permutations of S_0..S_7";
  return v;
}

// 7. Performance floor.
Verdict performance() {
  using clock = std::chrono::steady_clock;
  Verdict v;
  const auto t0 = clock::now();
  std::size_t count = 0, matches = 0;
  for_each_avoider(12, [&](const Permutation& p) {
    ++count;
    matches += mmp_count(p, MmpPattern::nat(1, 1, 1, 1));
  });
  const double enum_s = std::chrono::duration<double>(clock::now() - t0).count();
  if (count != 208012 || enum_s >= 10.0) v.pass = false;

  double worst = 0;
  PatternKey worst_pat{};
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; b <= 4; ++b)
      for (unsigned c = 0; c <= 4; ++c)
        for (unsigned d = 0; d <= 4; ++d) {
          const auto t1 = clock::now();
          const XPoly q = q_poly_recursive(40, {a, b, c, d});
          const double s = std::chrono::duration<double>(clock::now() - t1).count();
          if (q.eval(1) != catalan(40)) v.pass = false;
          if (s > worst) {
            worst = s;
            worst_pat = {a, b, c, d};
          }
        }
  if (worst >= 1.0) v.pass = false;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "S_12(132): %zu permutations in %.3f s; recursion n=40, entries <= 4: slowest %.3f s (%s)",
                count, enum_s, worst, to_string(worst_pat).c_str());
  v.detail = buf;
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"1 printed series reproduced by the identities", printed_series},
      {"2 brute force = recursion = identities", triple_agreement},
      {"3 closed forms at x=0", x_zero_forms},
      {"4 coefficient theorems", coefficient_theorems},
      {"5 classical equivalences", classical},
      {"6 invariants", invariants},
      {"7 performance floor", performance},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
