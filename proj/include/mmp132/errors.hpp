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

#ifndef MMP132_ERRORS_HPP_
#define MMP132_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mmp132 {

// Malformed or out-of-contract input (duplicate entries, bad pattern text,
// position out of range, mismatched truncation orders, ...).
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

// A request that would exceed a configured enumeration cap.
class ResourceLimit : public std::runtime_error {
 public:
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mmp132

#endif  // MMP132_ERRORS_HPP_
