// Copyright 2026 The mwpsas Authors
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

#ifndef MWPSAS_WEIGHT_HPP_
#define MWPSAS_WEIGHT_HPP_

#include <cstdint>
#include <limits>

#include "mwpsas/errors.hpp"

namespace mwpsas {

/// All p-sums, D, C and f values. Unsigned 64-bit; every accumulation in the
/// library goes through the checked helpers below so overflow throws instead
/// of wrapping.
using Weight = std::uint64_t;

inline constexpr Weight kWeightMax = std::numeric_limits<Weight>::max();

inline Weight checked_add(Weight a, Weight b) {
  if (a > kWeightMax - b) throw OverflowError("weight addition wraps");
  return a + b;
}

inline Weight checked_sub(Weight a, Weight b) {
  if (b > a) throw OverflowError("weight subtraction underflows");
  return a - b;
}

inline Weight checked_mul(Weight a, Weight b) {
  if (a != 0 && b > kWeightMax / a) throw OverflowError("weight multiplication wraps");
  return a * b;
}

/// ceil(a / b); b must be positive.
inline Weight ceil_div(Weight a, Weight b) {
  return a == 0 ? 0 : (a - 1) / b + 1;
}

}  // namespace mwpsas

#endif  // MWPSAS_WEIGHT_HPP_
