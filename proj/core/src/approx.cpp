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

#include "mwpsas/approx.hpp"

#include <algorithm>
#include <numeric>

#include "mwpsas/errors.hpp"

namespace mwpsas {

namespace {

Weight sum_n_weights(const Instance& inst) {
  Weight s = 0;
  for (Weight w : inst.n_weights) s = checked_add(s, w);
  return s;
}

Weight sum_m_weights(const Instance& inst) {
  Weight s = 0;
  for (Weight w : inst.m_weights) s = checked_add(s, w);
  return s;
}

// Weight of the M-union of one group, each distinct M-element once.
Weight group_union_weight(const Instance& inst, const std::vector<NId>& group,
                          std::vector<bool>& scratch) {
  std::fill(scratch.begin(), scratch.end(), false);
  Weight s = 0;
  for (NId i : group) {
    for (MId j : inst.assoc_of(i)) {
      if (!scratch[j - 1]) {
        scratch[j - 1] = true;
        s = checked_add(s, inst.m_weight(j));
      }
    }
  }
  return s;
}

// p_i + weight of M(i), the cost of i alone; drives element choice and the
// single-element part of the lower bound.
std::vector<Weight> element_costs(const Instance& inst) {
  std::vector<Weight> cost(inst.n_count);
  for (std::uint32_t i = 0; i < inst.n_count; ++i) {
    Weight c = inst.n_weights[i];
    for (MId j : inst.assoc[i]) c = checked_add(c, inst.m_weight(j));
    cost[i] = c;
  }
  return cost;
}

}  // namespace

Weight compute_d(const Instance& inst, const InitialPartition& init) {
  check_partition_blocks(inst, init.groups);
  std::vector<bool> scratch(inst.m_count, false);

  Weight union_sums = 0;  // sum over groups of S_u; shared M-elements count per group
  Weight max_term = 0;
  for (const auto& group : init.groups) {
    Weight s_u = group_union_weight(inst, group, scratch);
    union_sums = checked_add(union_sums, s_u);
    Weight max_p = 0;
    for (NId i : group) max_p = std::max(max_p, inst.n_weight(i));
    max_term = std::max(max_term, checked_add(max_p, s_u));
  }

  Weight numerator = checked_add(sum_n_weights(inst), union_sums);
  // Both addends are >= 1 (weights are positive), so the -1 cannot underflow.
  return checked_add(ceil_div(numerator, inst.machines), max_term) - 1;
}

Weight lower_bound(const Instance& inst) {
  Weight total = checked_add(sum_n_weights(inst), sum_m_weights(inst));
  Weight bound = ceil_div(total, inst.machines);
  for (Weight c : element_costs(inst)) bound = std::max(bound, c);
  return bound;
}

BoundReport deviation_bound(const Instance& inst, const InitialPartition& init) {
  BoundReport report;
  report.d_value = compute_d(inst, init);
  report.lower_bound = lower_bound(inst);
  // D >= lower_bound always: the ceil term of D dominates the ceil half of
  // the bound (group unions cover M), and the max term dominates every
  // single-element cost.
  report.deviation_bound = checked_sub(report.d_value, report.lower_bound);
  return report;
}

InitialPartition strategy_whole(const Instance& inst) {
  InitialPartition init;
  init.groups.emplace_back(inst.n_count);
  std::iota(init.groups[0].begin(), init.groups[0].end(), NId{1});
  return init;
}

InitialPartition strategy_singletons(const Instance& inst) {
  InitialPartition init;
  init.groups.reserve(inst.n_count);
  for (NId i = 1; i <= inst.n_count; ++i) init.groups.push_back({i});
  return init;
}

InitialPartition strategy_group_m1(const Instance& inst) {
  if (!is_m1_instance(inst))
    throw VariantError("group-m1 initial partition requires an M1 instance");
  InitialPartition init;
  init.groups = n_families(inst);
  return init;
}

namespace {

// Mutable block state for the greedy packer: element list, running term and
// M-union membership so the admission test costs O(|M(i)|).
struct OpenBlock {
  std::vector<NId> elems;
  Weight term = 0;
  std::vector<bool> has_m;

  explicit OpenBlock(std::uint32_t m_count) : has_m(m_count, false) {}

  Weight admission_delta(const Instance& inst, NId i) const {
    Weight delta = inst.n_weight(i);
    for (MId j : inst.assoc_of(i))
      if (!has_m[j - 1]) delta = checked_add(delta, inst.m_weight(j));
    return delta;
  }

  void admit(const Instance& inst, NId i, Weight delta) {
    elems.push_back(i);
    term = checked_add(term, delta);
    for (MId j : inst.assoc_of(i)) has_m[j - 1] = true;
  }
};

}  // namespace

ApproxResult approximate_partition(const Instance& inst, const InitialPartition& init) {
  check_partition_blocks(inst, init.groups);
  const Weight d = compute_d(inst, init);
  const std::vector<Weight> cost = element_costs(inst);
  const std::uint32_t m = inst.machines;

  std::vector<OpenBlock> blocks;
  blocks.emplace_back(inst.m_count);

  // Phase 1: pack group by group. Each pass visits the group's remaining
  // elements in fixed order (largest cost first, ties by smallest id) and
  // admits those that keep the current block's term within D. Leftovers
  // after a pass open a fresh block; the group index only advances once the
  // group is empty.
  for (const auto& group : init.groups) {
    std::vector<NId> remaining = group;
    std::sort(remaining.begin(), remaining.end(), [&](NId a, NId b) {
      if (cost[a - 1] != cost[b - 1]) return cost[a - 1] > cost[b - 1];
      return a < b;
    });
    while (!remaining.empty()) {
      const bool block_was_empty = blocks.back().elems.empty();
      std::vector<NId> leftovers;
      for (NId i : remaining) {
        Weight delta = blocks.back().admission_delta(inst, i);
        if (checked_add(blocks.back().term, delta) <= d) {
          blocks.back().admit(inst, i, delta);
        } else {
          leftovers.push_back(i);
        }
      }
      if (block_was_empty && leftovers.size() == remaining.size())
        throw InternalInvariantError("no element fits an empty block under D");
      remaining = std::move(leftovers);
      if (!remaining.empty()) blocks.emplace_back(inst.m_count);
    }
  }

  if (blocks.size() > m)
    throw InternalInvariantError("phase 1 produced " + std::to_string(blocks.size()) +
                                 " blocks for m = " + std::to_string(m));

  // Phase 2: split singletons off until exactly m blocks exist. The scan
  // restarts from the first block every iteration and stops at the first
  // block with more than one element.
  while (blocks.size() < m) {
    std::size_t k = 0;
    while (k < blocks.size() && blocks[k].elems.size() == 1) ++k;
    if (k == blocks.size())
      throw InternalInvariantError("phase 2 found no block with two or more elements");
    auto smallest = std::min_element(blocks[k].elems.begin(), blocks[k].elems.end());
    NId moved = *smallest;
    blocks[k].elems.erase(smallest);
    blocks.emplace_back(inst.m_count);
    blocks.back().elems.push_back(moved);
  }

  ApproxResult result;
  result.partition.blocks.reserve(blocks.size());
  for (auto& b : blocks) {
    std::sort(b.elems.begin(), b.elems.end());
    result.partition.blocks.push_back(std::move(b.elems));
  }
  result.objective = evaluate_objective(inst, result.partition);
  if (result.objective > d)
    throw InternalInvariantError("objective " + std::to_string(result.objective) +
                                 " exceeds D = " + std::to_string(d));
  return result;
}

}  // namespace mwpsas
