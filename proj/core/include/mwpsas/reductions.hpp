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

#ifndef MWPSAS_REDUCTIONS_HPP_
#define MWPSAS_REDUCTIONS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mwpsas/model.hpp"

namespace mwpsas {

/// Undirected simple graph on nodes 1..node_count. Edges are stored as
/// (u, v) with u < v, sorted ascending, no duplicates; validate_graph
/// establishes that form.
struct Graph {
  std::uint32_t node_count = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  bool operator==(const Graph&) const = default;
};

/// Normalizes edge orientation and order, then checks simplicity and id
/// ranges. Throws PreconditionError on loops, duplicates or bad ids.
Graph validate_graph(Graph raw);

/// A 3-partition input: 3r integers a_1..a_3r, each > 1, summing to r*B,
/// with B/4 < a_k < B/2 strictly.
struct Part3Instance {
  std::uint32_t r = 0;
  Weight b = 0;
  std::vector<Weight> a;

  bool operator==(const Part3Instance&) const = default;
};

/// Throws Part3FormatError unless all Part3Instance invariants hold.
void validate_part3(const Part3Instance& p3);

/// Role labels for every id of a constructed decision instance, so the
/// source problem's structure stays visible in the output. Index i-1 / j-1
/// holds the label of N-id i / M-id j. Labels are single tokens, e.g.
/// "W(1,3)", "T", "T0", "V2", "S", "A4".
struct Provenance {
  std::vector<std::string> n_labels;
  std::vector<std::string> m_labels;
};

/// A decision-version instance: is there a partition with objective <= target?
struct DecisionInstance {
  Instance instance;
  Weight target = 0;
  Provenance provenance;
};

/// Clique-to-MWPSAS transformer. Requires k > 1, k < |V| and
/// (k^2-k)/2 < |W|; throws PreconditionError otherwise.
///
/// Layout: N = edge elements (in sorted edge order), then (k^2+k)/2
/// T-elements, then the single T0-element; M = the |V| node elements, then
/// |S| = |V| + |W| - (k^2-k)/2 - 1 S-elements. Each edge element maps to its
/// two endpoints, each T-element to all of V, the T0-element to all of S.
/// Unit weights, machines = 2, target = |V| + |W| + k. The graph has a
/// k-clique iff the target is attainable.
DecisionInstance reduce_clique(const Graph& g, std::uint32_t k);

/// 3-partition to MWPSAS_M1. M gets one element j_k per integer; N is the
/// disjoint union of blocks A_k of size a_k - 1, laid out in k order, each
/// associated with {j_k}. Unit weights, machines = r, target = B. Throws
/// Part3FormatError on malformed input and PreconditionError when machines
/// would not be smaller than |N|.
DecisionInstance reduce_part3_m1(const Part3Instance& p3);

/// 3-partition to MWPSAS_N1. N gets one element i_k per integer; M is the
/// disjoint union of blocks A_k of size a_k - 1 in k order, with
/// assoc(i_k) = A_k. Unit weights, machines = r, target = B.
DecisionInstance reduce_part3_n1(const Part3Instance& p3);

}  // namespace mwpsas

#endif  // MWPSAS_REDUCTIONS_HPP_
