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

// Prints Q^{(1,1,1,1)}(t,x) through t^10 by the structural recursion and by
// the generating-function identities, then the permutations of length 5
// with a match.

#include <iostream>

#include "mmp132/mmp132.hpp"

int main() {
  const mmp132::PatternKey pat{1, 1, 1, 1};

  const mmp132::TSeries rec = mmp132::q_series_recursive(pat, 10);
  mmp132::GfSolver solver(10);
  const mmp132::GfResult gf = solver.dispatch(pat);

  std::cout << mmp132::to_string(rec);
  std::cout << "identity " << mmp132::route_name(gf.request.route)
            << (gf.series == rec ? " agrees\n" : " DISAGREES\n");

  mmp132::for_each_avoider(5, [&](const mmp132::Permutation& p) {
    if (const auto k = mmp132::mmp_count(p, pat.as_mmp()); k > 0)
      std::cout << mmp132::to_string(p) << ' ' << k << '\n';
  });
}
