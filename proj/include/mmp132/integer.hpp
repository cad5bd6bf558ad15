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

#ifndef MMP132_INTEGER_HPP_
#define MMP132_INTEGER_HPP_

#include <gmpxx.h>

#include <cstdint>

namespace mmp132 {

// Exact integers everywhere; no quantity in this library is ever rounded.
using BigInt = mpz_class;

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  BigInt r;
  if (k > n) return r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// C_n = binom(2n, n) / (n + 1).
inline BigInt catalan(std::uint64_t n) {
  BigInt r = binomial(2 * n, n);
  r /= static_cast<unsigned long>(n + 1);
  return r;
}

}  // namespace mmp132

#endif  // MMP132_INTEGER_HPP_
