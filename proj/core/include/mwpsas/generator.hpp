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

#ifndef MWPSAS_GENERATOR_HPP_
#define MWPSAS_GENERATOR_HPP_

#include <cstdint>
#include <string>

#include "mwpsas/model.hpp"

namespace mwpsas {

enum class Variant { general, m1, n1 };

Variant parse_variant(const std::string& name);  // throws ParameterError
std::string variant_name(Variant v);

/// Seeded random instance generation. Deterministic for a fixed parameter
/// tuple; the output always passes validate_instance and the requested
/// variant's classifier.
///
/// general: weights uniform in [1, max_weight], random small associations,
/// then every uncovered M-id is attached to a random N-element. m1: unit
/// weights, each element carries exactly one M-id, every M-id covered
/// (requires n >= m_set). n1: unit weights, each M-id attached to exactly one
/// N-element. Throws ParameterError on inconsistent parameters.
Instance generate_instance(std::uint64_t seed, std::uint32_t n, std::uint32_t m_set,
                           std::uint32_t machines, Weight max_weight, Variant variant);

}  // namespace mwpsas

#endif  // MWPSAS_GENERATOR_HPP_
