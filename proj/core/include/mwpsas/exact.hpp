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

#ifndef MWPSAS_EXACT_HPP_
#define MWPSAS_EXACT_HPP_

#include <chrono>
#include <cstdint>

#include "mwpsas/model.hpp"
#include "mwpsas/reductions.hpp"

namespace mwpsas {

struct ExactResult {
  Weight optimum = 0;        // best incumbent when timed_out
  Partition witness;         // attains `optimum`
  std::uint64_t nodes_explored = 0;
  bool timed_out = false;
};

/// Optimal solver for small instances (|N| up to roughly 14, more when m is
/// tiny). Branch and bound over assignments of N-elements, largest
/// single-element cost first, with canonical symmetry breaking: an element
/// may open block b only when blocks 1..b-1 are non-empty. The incumbent is
/// seeded with the greedy solver over the whole-set initial partition, a node
/// is pruned as soon as its running max reaches the incumbent, and the search
/// stops early when the incumbent meets lower_bound().
///
/// On timeout the best incumbent comes back with timed_out set; completed
/// runs are deterministic (first optimum found in branching order wins).
ExactResult exact_solve(const Instance& inst,
                        std::chrono::milliseconds time_budget = std::chrono::milliseconds{10000});

enum class Decision { yes, no, unknown };

/// Decision version: is there a partition of N into `machines` non-empty
/// blocks with objective <= c? Searches with the bound capped at c+1, so a
/// "no" does not pay for proving the exact optimum. `unknown` only on
/// timeout with the incumbent still above c.
Decision decide(const Instance& inst, Weight c,
                std::chrono::milliseconds time_budget = std::chrono::milliseconds{10000});

/// Enumeration oracle: true iff g has k pairwise-adjacent nodes. Intended
/// for |V| up to roughly 12; throws PreconditionError when k <= 1.
bool brute_force_clique(const Graph& g, std::uint32_t k);

/// Enumeration oracle: true iff {1..3r} splits into r triples, each with
/// a-sum exactly B. Validates the input first (Part3FormatError); intended
/// for r up to roughly 4.
bool brute_force_3partition(const Part3Instance& p3);

}  // namespace mwpsas

#endif  // MWPSAS_EXACT_HPP_
