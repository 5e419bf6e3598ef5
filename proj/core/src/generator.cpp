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

#include "mwpsas/generator.hpp"

#include <algorithm>
#include <numeric>

#include "mwpsas/errors.hpp"
#include "mwpsas/rng.hpp"

namespace mwpsas {

Variant parse_variant(const std::string& name) {
  if (name == "general") return Variant::general;
  if (name == "m1") return Variant::m1;
  if (name == "n1") return Variant::n1;
  throw ParameterError("unknown variant '" + name + "'");
}

std::string variant_name(Variant v) {
  switch (v) {
    case Variant::general: return "general";
    case Variant::m1: return "m1";
    case Variant::n1: return "n1";
  }
  throw ParameterError("bad variant value");
}

namespace {

constexpr std::uint32_t kMaxGeneratedIds = 1u << 20;

}  // namespace

Instance generate_instance(std::uint64_t seed, std::uint32_t n, std::uint32_t m_set,
                           std::uint32_t machines, Weight max_weight, Variant variant) {
  if (n < 2 || n > kMaxGeneratedIds) throw ParameterError("n must be in [2, 2^20]");
  if (m_set < 1 || m_set > kMaxGeneratedIds) throw ParameterError("m_set must be in [1, 2^20]");
  if (machines < 1 || machines >= n) throw ParameterError("need 1 <= machines < n");
  if (variant == Variant::general && max_weight < 1)
    throw ParameterError("max_weight must be at least 1");
  if (variant == Variant::m1 && n < m_set)
    throw ParameterError("m1 variant needs n >= m_set to cover every M-id");

  SplitMix64 rng(seed);
  Instance inst;
  inst.n_count = n;
  inst.m_count = m_set;
  inst.machines = machines;
  inst.assoc.resize(n);

  switch (variant) {
    case Variant::general: {
      inst.n_weights.resize(n);
      inst.m_weights.resize(m_set);
      for (auto& w : inst.n_weights) w = rng.between(1, max_weight);
      for (auto& w : inst.m_weights) w = rng.between(1, max_weight);

      const std::uint64_t max_assoc = std::min<std::uint64_t>(m_set, 4);
      std::vector<bool> covered(m_set, false);
      for (std::uint32_t i = 0; i < n; ++i) {
        const std::uint64_t want = rng.below(max_assoc + 1);
        std::vector<MId> ids;
        while (ids.size() < want) {
          MId j = static_cast<MId>(rng.between(1, m_set));
          if (std::find(ids.begin(), ids.end(), j) == ids.end()) ids.push_back(j);
        }
        std::sort(ids.begin(), ids.end());
        for (MId j : ids) covered[j - 1] = true;
        inst.assoc[i] = std::move(ids);
      }
      for (MId j = 1; j <= m_set; ++j) {
        if (covered[j - 1]) continue;
        auto& ids = inst.assoc[rng.below(n)];
        ids.insert(std::lower_bound(ids.begin(), ids.end(), j), j);
      }
      break;
    }
    case Variant::m1: {
      inst.n_weights.assign(n, 1);
      inst.m_weights.assign(m_set, 1);
      // Random surjection N -> M: a random m_set-subset of N pins coverage,
      // everyone else draws freely.
      std::vector<NId> order(n);
      std::iota(order.begin(), order.end(), NId{1});
      rng.shuffle(order);
      for (std::uint32_t t = 0; t < n; ++t) {
        MId j = t < m_set ? static_cast<MId>(t + 1) : static_cast<MId>(rng.between(1, m_set));
        inst.assoc[order[t] - 1] = {j};
      }
      break;
    }
    case Variant::n1: {
      inst.n_weights.assign(n, 1);
      inst.m_weights.assign(m_set, 1);
      for (MId j = 1; j <= m_set; ++j) {
        auto& ids = inst.assoc[rng.below(n)];
        ids.push_back(j);  // ascending j keeps each list sorted
      }
      break;
    }
  }
  return validate_instance(std::move(inst));
}

}  // namespace mwpsas
