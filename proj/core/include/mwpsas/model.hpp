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

#ifndef MWPSAS_MODEL_HPP_
#define MWPSAS_MODEL_HPP_

#include <cstdint>
#include <vector>

#include "mwpsas/weight.hpp"

namespace mwpsas {

/// 1-based element ids, matching the external text formats.
using NId = std::uint32_t;
using MId = std::uint32_t;

/// An MWPSAS instance: a set N to be partitioned into `machines` blocks, a
/// set M of shared elements, positive integer weights on both, and the
/// association map i -> M(i). A block pays its own N-weights plus each
/// distinct associated M-weight once.
///
/// Instances are treated as immutable after validate_instance(); every
/// operation in the library takes a const reference and is safe to run
/// concurrently on a shared instance.
struct Instance {
  std::uint32_t n_count = 0;
  std::uint32_t m_count = 0;
  std::uint32_t machines = 0;
  std::vector<Weight> n_weights;          // index i-1 holds p_i
  std::vector<Weight> m_weights;          // index j-1 holds p_j
  std::vector<std::vector<MId>> assoc;    // index i-1 holds M(i), sorted ascending

  Weight n_weight(NId i) const { return n_weights[i - 1]; }
  Weight m_weight(MId j) const { return m_weights[j - 1]; }
  const std::vector<MId>& assoc_of(NId i) const { return assoc[i - 1]; }

  bool operator==(const Instance&) const = default;
};

/// An ordered list of disjoint non-empty blocks of N-ids covering N.
/// Elements within a block are kept sorted ascending by every producer in
/// this library; consumers do not rely on it.
struct Partition {
  std::vector<std::vector<NId>> blocks;

  bool operator==(const Partition&) const = default;
};

/// Checks all Instance invariants and returns the instance with each assoc
/// list sorted. Throws CoverageError, WeightError, MachineCountError or
/// IdError.
///
/// The overflow rule: sum(N weights) + |N| * sum(M weights) must fit in 64
/// bits, which covers every sum the solvers and bound computations form.
Instance validate_instance(Instance raw);

/// The objective: max over blocks of (block N-weight + weight of the block's
/// M-union). Accepts any positive block count, not only `machines`; the
/// evaluator is shared by solvers, oracles and verifiers. Throws
/// PartitionError when `part` is not a partition of N.
Weight evaluate_objective(const Instance& inst, const Partition& part);

/// Weight of a single block under the objective: sum of its N-weights plus
/// each distinct associated M-weight once.
Weight block_term(const Instance& inst, const std::vector<NId>& block);

/// Throws PartitionError unless `blocks` is a list of disjoint non-empty
/// blocks of in-range ids covering {1..n_count}.
void check_partition_blocks(const Instance& inst, const std::vector<std::vector<NId>>& blocks);

/// True iff the instance is in the M1 variant: unit weights, |M(i)| = 1 for
/// every i, and the families N(j) pairwise disjoint.
bool is_m1_instance(const Instance& inst);

/// True iff the instance is in the N1 variant: unit weights, |N(j)| = 1 for
/// every j, and the sets M(i) pairwise disjoint.
bool is_n1_instance(const Instance& inst);

/// N(j) for every j: the N-ids whose association contains j, ascending.
/// Index j-1 holds N(j).
std::vector<std::vector<NId>> n_families(const Instance& inst);

}  // namespace mwpsas

#endif  // MWPSAS_MODEL_HPP_
