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

#include "mwpsas/model.hpp"

#include <algorithm>
#include <string>

#include "mwpsas/errors.hpp"

namespace mwpsas {

Instance validate_instance(Instance raw) {
  if (raw.n_count == 0) throw MachineCountError("|N| must be positive");
  if (raw.m_count == 0) throw CoverageError("|M| must be positive");
  if (raw.machines < 1) throw MachineCountError("machines must be at least 1");
  if (raw.machines >= raw.n_count)
    throw MachineCountError("machines = " + std::to_string(raw.machines) +
                            " must be smaller than |N| = " + std::to_string(raw.n_count));
  if (raw.n_weights.size() != raw.n_count)
    throw WeightError("expected " + std::to_string(raw.n_count) + " N-weights, got " +
                      std::to_string(raw.n_weights.size()));
  if (raw.m_weights.size() != raw.m_count)
    throw WeightError("expected " + std::to_string(raw.m_count) + " M-weights, got " +
                      std::to_string(raw.m_weights.size()));
  if (raw.assoc.size() != raw.n_count)
    throw IdError("expected " + std::to_string(raw.n_count) + " association lists, got " +
                  std::to_string(raw.assoc.size()));

  Weight sum_n = 0;
  for (std::uint32_t i = 0; i < raw.n_count; ++i) {
    if (raw.n_weights[i] == 0)
      throw WeightError("N-element " + std::to_string(i + 1) + " has weight 0");
    sum_n = checked_add(sum_n, raw.n_weights[i]);
  }
  Weight sum_m = 0;
  for (std::uint32_t j = 0; j < raw.m_count; ++j) {
    if (raw.m_weights[j] == 0)
      throw WeightError("M-element " + std::to_string(j + 1) + " has weight 0");
    sum_m = checked_add(sum_m, raw.m_weights[j]);
  }

  // Reject totals that could wrap during D computation: the worst sum formed
  // anywhere in the library is sum(N) + r * sum(M) with r <= |N|.
  try {
    checked_add(sum_n, checked_mul(raw.n_count, sum_m));
  } catch (const OverflowError&) {
    throw WeightError("total weight too large for 64-bit arithmetic");
  }

  std::vector<bool> covered(raw.m_count, false);
  for (std::uint32_t i = 0; i < raw.n_count; ++i) {
    auto& ids = raw.assoc[i];
    std::sort(ids.begin(), ids.end());
    for (std::size_t t = 0; t < ids.size(); ++t) {
      MId j = ids[t];
      if (j < 1 || j > raw.m_count)
        throw IdError("assoc(" + std::to_string(i + 1) + ") references M-id " + std::to_string(j));
      if (t > 0 && ids[t - 1] == j)
        throw IdError("assoc(" + std::to_string(i + 1) + ") lists M-id " + std::to_string(j) +
                      " twice");
      covered[j - 1] = true;
    }
  }
  for (std::uint32_t j = 0; j < raw.m_count; ++j) {
    if (!covered[j]) throw CoverageError("M-id " + std::to_string(j + 1) + " is in no assoc(i)");
  }
  return raw;
}

void check_partition_blocks(const Instance& inst, const std::vector<std::vector<NId>>& blocks) {
  if (blocks.empty()) throw PartitionError("no blocks");
  std::vector<bool> seen(inst.n_count, false);
  std::size_t total = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw PartitionError("block " + std::to_string(b + 1) + " is empty");
    for (NId i : blocks[b]) {
      if (i < 1 || i > inst.n_count)
        throw PartitionError("block " + std::to_string(b + 1) + " references N-id " +
                             std::to_string(i));
      if (seen[i - 1])
        throw PartitionError("N-id " + std::to_string(i) + " appears in two blocks");
      seen[i - 1] = true;
    }
    total += blocks[b].size();
  }
  if (total != inst.n_count) throw PartitionError("blocks do not cover N");
}

namespace {

bool has_unit_weights(const Instance& inst) {
  for (Weight w : inst.n_weights)
    if (w != 1) return false;
  for (Weight w : inst.m_weights)
    if (w != 1) return false;
  return true;
}

}  // namespace

Weight block_term(const Instance& inst, const std::vector<NId>& block) {
  Weight term = 0;
  std::vector<bool> in_union(inst.m_count, false);
  for (NId i : block) {
    term = checked_add(term, inst.n_weight(i));
    for (MId j : inst.assoc_of(i)) {
      if (!in_union[j - 1]) {
        in_union[j - 1] = true;
        term = checked_add(term, inst.m_weight(j));
      }
    }
  }
  return term;
}

Weight evaluate_objective(const Instance& inst, const Partition& part) {
  check_partition_blocks(inst, part.blocks);
  Weight best = 0;
  for (const auto& block : part.blocks) best = std::max(best, block_term(inst, block));
  return best;
}

bool is_m1_instance(const Instance& inst) {
  if (!has_unit_weights(inst)) return false;
  for (const auto& ids : inst.assoc)
    if (ids.size() != 1) return false;
  // With |M(i)| = 1 everywhere, each i lies in exactly one family N(j), so
  // the families are pairwise disjoint vacuously.
  return true;
}

bool is_n1_instance(const Instance& inst) {
  if (!has_unit_weights(inst)) return false;
  std::vector<std::uint32_t> refs(inst.m_count, 0);
  for (const auto& ids : inst.assoc)
    for (MId j : ids) ++refs[j - 1];
  // refs[j] == |N(j)|; all ones means both that every |N(j)| = 1 and that the
  // M(i) are pairwise disjoint (no j appears in two association lists).
  for (std::uint32_t c : refs)
    if (c != 1) return false;
  return true;
}

std::vector<std::vector<NId>> n_families(const Instance& inst) {
  std::vector<std::vector<NId>> families(inst.m_count);
  for (std::uint32_t i = 0; i < inst.n_count; ++i)
    for (MId j : inst.assoc[i]) families[j - 1].push_back(i + 1);
  return families;
}

}  // namespace mwpsas
