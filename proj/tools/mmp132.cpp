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

// Command-line front end: distribution polynomials, series, the mmp
// statistic, sequence export, the closed-form registry and cross-validation.
//
// Exit status: 0 done, 1 a verification check failed, 2 usage or resource
// limit error.

#include <cstddef>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mmp132/mmp132.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::vector<mmp132::Permutation> parse_permutation_list(const std::vector<std::string>& items) {
  std::vector<mmp132::Permutation> out;
  for (const auto& s : items) out.push_back(mmp132::parse_permutation(s));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distribution of quadrant marked mesh patterns on 132-avoiding permutations"};
  app.require_subcommand(1);

  std::size_t cap = mmp132::kDefaultEnumerationCap;
  app.add_option("--cap", cap, "largest n enumerated by brute force")->capture_default_str();

  std::string pattern_text;
  std::size_t n = 0;
  std::size_t order = mmp132::kDefaultOrder;
  std::string method;

  auto* poly = app.add_subcommand("poly", "print Q_n(x)");
  poly->add_option("--pattern", pattern_text, "a,b,c,d")->required();
  poly->add_option("--n", n, "permutation length")->required();
  method = "rec";
  poly->add_option("--method", method, "brute | rec | gf")
      ->check(CLI::IsMember({"brute", "rec", "gf"}))
      ->capture_default_str();

  auto* series = app.add_subcommand("series", "print Q(t,x) through t^order");
  series->add_option("--pattern", pattern_text, "a,b,c,d")->required();
  series->add_option("--order", order, "truncation order")->capture_default_str();
  series->add_option("--method", method, "rec | gf")
      ->check(CLI::IsMember({"rec", "gf"}))
      ->capture_default_str();
  bool show_route = false;
  series->add_flag("--route", show_route, "print the identity used");

  std::string perm_text;
  auto* stat = app.add_subcommand("stat", "count matching positions in one permutation");
  stat->add_option("--perm", perm_text, "permutation, e.g. 471569283 or 10,3,1,...")->required();
  stat->add_option("--pattern", pattern_text, "a,b,c,d; e marks an empty quadrant")->required();

  std::string transform_text;
  std::size_t n_max = mmp132::kDefaultSequenceTerms;
  std::string format = "rows";
  auto* seq = app.add_subcommand("seq", "export a coefficient sequence, n = 1..n-max");
  seq->add_option("--pattern", pattern_text, "a,b,c,d")->required();
  seq->add_option("--transform", transform_text, "x0 | x^R | top")->required();
  seq->add_option("--n-max", n_max, "last n")->capture_default_str();
  seq->add_option("--format", format, "rows | csv")
      ->check(CLI::IsMember({"rows", "csv"}))
      ->capture_default_str();

  std::string only;
  long check_n_max = 25;
  auto* check = app.add_subcommand("check", "run the closed-form coefficient registry");
  check->add_option("--only", only, "run the checks whose name contains this text");
  check->add_option("--n-max", check_n_max, "last n checked")->capture_default_str();

  unsigned entry_bound = 4;
  std::size_t xval_n_max = 8;
  std::size_t xval_order = 8;
  auto* xval = app.add_subcommand("xval", "brute force vs recursion vs identities");
  xval->add_option("--entry-bound", entry_bound, "largest a+b+c+d")->capture_default_str();
  xval->add_option("--n-max", xval_n_max, "last n for brute force")->capture_default_str();
  xval->add_option("--order", xval_order, "truncation order for the identities")
      ->capture_default_str();

  std::vector<std::string> forbidden_text;
  std::size_t equiv_n_max = 9;
  auto* equiv = app.add_subcommand("equiv", "compare Q_n(0) with a classical avoidance count");
  equiv->add_option("--pattern", pattern_text, "a,b,c,d")->required();
  equiv->add_option("--forbid", forbidden_text, "classical patterns, e.g. 132 3124 4123");
  equiv->add_option("--n-max", equiv_n_max, "last n")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*poly) {
      const auto pat = mmp132::parse_pattern_key(pattern_text);
      mmp132::XPoly q;
      if (method == "brute") {
        q = mmp132::q_poly_bruteforce(n, pat, cap);
      } else if (method == "gf") {
        mmp132::GfSolver solver(n);
        q = solver.dispatch(pat).series[n];
      } else {
        q = mmp132::q_poly_recursive(n, pat);
      }
      std::cout << mmp132::to_string(q) << '\n';
      return kExitOk;
    }
    if (*series) {
      const auto pat = mmp132::parse_pattern_key(pattern_text);
      if (method == "gf") {
        mmp132::GfSolver solver(order);
        const auto r = solver.dispatch(pat);
        if (show_route)
          std::cout << "route: " << mmp132::route_name(r.request.route) << " on "
                    << mmp132::to_string(r.request.normalized) << '\n';
        std::cout << mmp132::to_string(r.series);
      } else {
        std::cout << mmp132::to_string(mmp132::q_series_recursive(pat, order));
      }
      return kExitOk;
    }
    if (*stat) {
      const auto p = mmp132::parse_permutation(perm_text);
      std::cout << mmp132::mmp_count(p, mmp132::parse_mmp_pattern(pattern_text)) << '\n';
      return kExitOk;
    }
    if (*seq) {
      const auto pat = mmp132::parse_pattern_key(pattern_text);
      const auto s = mmp132::export_sequence(pat, mmp132::parse_transform(transform_text), n_max);
      if (format == "csv") {
        mmp132::write_csv_header(std::cout);
        mmp132::write_csv_rows(std::cout, s);
      } else {
        mmp132::write_rows(std::cout, s);
      }
      return kExitOk;
    }
    if (*check) {
      std::vector<mmp132::ClosedFormCheck> registry;
      for (auto& c : mmp132::closed_form_registry())
        if (only.empty() || c.name.find(only) != std::string::npos) registry.push_back(std::move(c));
      if (registry.empty()) {
        std::cerr << "no check matches '" << only << "'\n";
        return kExitUsage;
      }
      const auto outcomes = mmp132::check_closed_forms(registry, check_n_max);
      std::cout << mmp132::format_check_report(outcomes);
      for (const auto& o : outcomes)
        if (!o.passed) return kExitCheckFailed;
      return kExitOk;
    }
    if (*xval) {
      const auto r = mmp132::cross_validate(entry_bound, xval_n_max, xval_order);
      std::cout << mmp132::format_cross_validation(r);
      return r.passed ? kExitOk : kExitCheckFailed;
    }
    if (*equiv) {
      const auto pat = mmp132::parse_pattern_key(pattern_text);
      const auto rep = mmp132::classical_equivalence_check(
          pat, parse_permutation_list(forbidden_text), equiv_n_max);
      for (const auto& row : rep.rows)
        std::cout << row.n << ' ' << row.q_at_zero.get_str() << ' ' << row.classical_count.get_str()
                  << (row.equal() ? " equal" : " DIFFERENT") << '\n';
      return rep.all_equal() ? kExitOk : kExitCheckFailed;
    }
  } catch (const mmp132::InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const mmp132::ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
