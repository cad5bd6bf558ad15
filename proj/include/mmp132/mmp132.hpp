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

#ifndef MMP132_MMP132_HPP_
#define MMP132_MMP132_HPP_

#include "mmp132/analysis.hpp"
#include "mmp132/distribution.hpp"
#include "mmp132/errors.hpp"
#include "mmp132/generating_functions.hpp"
#include "mmp132/integer.hpp"
#include "mmp132/mesh_pattern.hpp"
#include "mmp132/permutation.hpp"
#include "mmp132/series.hpp"
#include "mmp132/xpoly.hpp"

#endif  // MMP132_MMP132_HPP_
