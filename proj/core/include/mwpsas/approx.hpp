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

#ifndef MWPSAS_APPROX_HPP_
#define MWPSAS_APPROX_HPP_

#include <vector>

#include "mwpsas/model.hpp"

namespace mwpsas {

/// The initial partition R^1,...,R^r of N that parameterizes the greedy
/// solver. Same shape invariants as Partition; the order of the groups is
/// significant because the solver consumes them in order.
struct InitialPartition {
  std::vector<std::vector<NId>> groups;

  bool operator==(const InitialPartition&) const = default;
};

/// Packing threshold and additive guarantee derived from an initial
/// partition. deviation_bound == d_value - lower_bound identically.
struct BoundReport {
  Weight d_value = 0;
  Weight lower_bound = 0;
  Weight deviation_bound = 0;
};

/// The packing threshold
///
///   D = ceil((sum_N p + sum_u S_u) / m) + max_u (max_{j in R^u} p_j + S_u) - 1
///
/// where S_u is the weight of the M-union of group R^u. An M-element shared
/// by two groups contributes to both S_u; within one group it counts once.
Weight compute_d(const Instance& inst, const InitialPartition& init);

/// max{ ceil(total weight / m), max_i (p_i + weight of M(i)) }. Every
/// m-block partition costs at least this much.
Weight lower_bound(const Instance& inst);

/// Bundles D, the lower bound, and their difference (the additive bound on
/// f(P) - f* for the partition the solver returns).
BoundReport deviation_bound(const Instance& inst, const InitialPartition& init);

/// Initial-partition strategies: the whole set as one group; one singleton
/// group per element in id order; and, for M1 instances only, one group N(j)
/// per M-id j in id order (throws VariantError otherwise).
InitialPartition strategy_whole(const Instance& inst);
InitialPartition strategy_singletons(const Instance& inst);
InitialPartition strategy_group_m1(const Instance& inst);

struct ApproxResult {
  Partition partition;  // exactly `machines` non-empty blocks
  Weight objective = 0; // f of that partition, always <= D
};

/// Two-phase greedy solver. Phase 1 walks the groups in order and packs
/// elements into the current block while its term stays within D, opening a
/// new block whenever a pass over the current group leaves leftovers; phase 2
/// splits singletons off multi-element blocks until exactly m blocks exist.
///
/// Element choice within a pass: largest p_i + weight(M(i)) first, ties by
/// smallest id. Phase 2 always removes the smallest id from the first block
/// holding more than one element. Both rules exist for determinism only; the
/// f(P) <= D guarantee does not depend on them.
///
/// Throws InternalInvariantError if phase 1 ends with more than m blocks or
/// phase 2 finds no splittable block; both are self-checks that cannot fire
/// on a valid instance.
ApproxResult approximate_partition(const Instance& inst, const InitialPartition& init);

}  // namespace mwpsas

#endif  // MWPSAS_APPROX_HPP_
