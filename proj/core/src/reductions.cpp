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

#include "mwpsas/reductions.hpp"

#include <algorithm>
#include <numeric>

#include "mwpsas/errors.hpp"

namespace mwpsas {

namespace {

// Hard cap on constructed element counts; reductions are meant for
// oracle-checkable sizes, not bulk instance generation.
constexpr std::uint64_t kMaxConstructedIds = 1u << 20;

std::string label(const std::string& prefix, std::uint64_t x) {
  return prefix + std::to_string(x);
}

}  // namespace

Graph validate_graph(Graph raw) {
  for (auto& [u, v] : raw.edges) {
    if (u == v) throw PreconditionError("graph has a loop at node " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 1 || v > raw.node_count)
      throw PreconditionError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range");
  }
  std::sort(raw.edges.begin(), raw.edges.end());
  if (std::adjacent_find(raw.edges.begin(), raw.edges.end()) != raw.edges.end())
    throw PreconditionError("graph has a duplicate edge");
  return raw;
}

void validate_part3(const Part3Instance& p3) {
  if (p3.r == 0) throw Part3FormatError("r must be positive");
  if (p3.a.size() != static_cast<std::size_t>(3) * p3.r)
    throw Part3FormatError("expected " + std::to_string(3 * p3.r) + " integers, got " +
                           std::to_string(p3.a.size()));
  Weight sum = 0;
  for (Weight ak : p3.a) {
    if (ak <= 1) throw Part3FormatError("every a_k must exceed 1");
    // Strict bounds B/4 < a_k < B/2, kept in integer arithmetic.
    if (checked_mul(ak, 4) <= p3.b || checked_mul(ak, 2) >= p3.b)
      throw Part3FormatError("a_k = " + std::to_string(ak) + " violates B/4 < a_k < B/2 for B = " +
                             std::to_string(p3.b));
    sum = checked_add(sum, ak);
  }
  if (sum != checked_mul(p3.r, p3.b))
    throw Part3FormatError("sum of a_k is " + std::to_string(sum) + ", expected r*B = " +
                           std::to_string(checked_mul(p3.r, p3.b)));
}

DecisionInstance reduce_clique(const Graph& graph, std::uint32_t k) {
  const Graph g = validate_graph(graph);
  const std::uint64_t n = g.node_count;
  const std::uint64_t w = g.edges.size();
  if (k <= 1) throw PreconditionError("k must exceed 1");
  if (k >= n)
    throw PreconditionError("k = " + std::to_string(k) + " must be smaller than |V| = " +
                            std::to_string(n));
  const std::uint64_t clique_edges = (std::uint64_t{k} * k - k) / 2;  // (k^2-k)/2
  if (clique_edges >= w)
    throw PreconditionError("need (k^2-k)/2 < |W|: " + std::to_string(clique_edges) +
                            " >= " + std::to_string(w));

  const std::uint64_t t_count = (std::uint64_t{k} * k + k) / 2;  // (k^2+k)/2
  const std::uint64_t s_count = n + w - clique_edges - 1;
  const std::uint64_t n_total = w + t_count + 1;
  const std::uint64_t m_total = n + s_count;
  if (n_total > kMaxConstructedIds || m_total > kMaxConstructedIds)
    throw PreconditionError("constructed instance too large");

  DecisionInstance out;
  Instance& inst = out.instance;
  inst.n_count = static_cast<std::uint32_t>(n_total);
  inst.m_count = static_cast<std::uint32_t>(m_total);
  inst.machines = 2;
  inst.n_weights.assign(inst.n_count, 1);
  inst.m_weights.assign(inst.m_count, 1);
  inst.assoc.resize(inst.n_count);
  out.provenance.n_labels.resize(inst.n_count);
  out.provenance.m_labels.resize(inst.m_count);

  // N layout: edges first, then T, then T0. M layout: V first, then S.
  NId next = 1;
  for (const auto& [u, v] : g.edges) {
    inst.assoc[next - 1] = {u, v};
    out.provenance.n_labels[next - 1] =
        "W(" + std::to_string(u) + "," + std::to_string(v) + ")";
    ++next;
  }
  std::vector<MId> all_v(n);
  std::iota(all_v.begin(), all_v.end(), MId{1});
  for (std::uint64_t t = 0; t < t_count; ++t) {
    inst.assoc[next - 1] = all_v;
    out.provenance.n_labels[next - 1] = "T";
    ++next;
  }
  std::vector<MId> all_s(s_count);
  std::iota(all_s.begin(), all_s.end(), static_cast<MId>(n + 1));
  inst.assoc[next - 1] = std::move(all_s);
  out.provenance.n_labels[next - 1] = "T0";

  for (std::uint64_t j = 0; j < n; ++j) out.provenance.m_labels[j] = label("V", j + 1);
  for (std::uint64_t j = n; j < m_total; ++j) out.provenance.m_labels[j] = "S";

  out.target = checked_add(checked_add(n, w), k);
  out.instance = validate_instance(std::move(out.instance));
  return out;
}

namespace {

// Shared A-block scaffolding of the two 3-partition constructions. Returns
// the first id of each block when the blocks of sizes a_k - 1 are laid out
// consecutively in k order.
std::uint64_t total_block_ids(const Part3Instance& p3) {
  std::uint64_t total = 0;
  for (Weight ak : p3.a) total += ak - 1;
  return total;
}

}  // namespace

DecisionInstance reduce_part3_m1(const Part3Instance& p3) {
  validate_part3(p3);
  const std::uint64_t n_total = total_block_ids(p3);
  const std::uint64_t m_total = std::uint64_t{3} * p3.r;
  if (n_total > kMaxConstructedIds) throw PreconditionError("constructed instance too large");
  if (p3.r >= n_total)
    throw PreconditionError("machines = r = " + std::to_string(p3.r) +
                            " would not be smaller than |N| = " + std::to_string(n_total));

  DecisionInstance out;
  Instance& inst = out.instance;
  inst.n_count = static_cast<std::uint32_t>(n_total);
  inst.m_count = static_cast<std::uint32_t>(m_total);
  inst.machines = p3.r;
  inst.n_weights.assign(inst.n_count, 1);
  inst.m_weights.assign(inst.m_count, 1);
  inst.assoc.resize(inst.n_count);
  out.provenance.n_labels.resize(inst.n_count);
  out.provenance.m_labels.resize(inst.m_count);

  NId next = 1;
  for (std::uint32_t k = 1; k <= m_total; ++k) {
    out.provenance.m_labels[k - 1] = label("A", k);
    for (Weight t = 1; t < p3.a[k - 1]; ++t) {
      inst.assoc[next - 1] = {static_cast<MId>(k)};
      out.provenance.n_labels[next - 1] = label("A", k);
      ++next;
    }
  }

  out.target = p3.b;
  out.instance = validate_instance(std::move(out.instance));
  return out;
}

DecisionInstance reduce_part3_n1(const Part3Instance& p3) {
  validate_part3(p3);
  const std::uint64_t n_total = std::uint64_t{3} * p3.r;
  const std::uint64_t m_total = total_block_ids(p3);
  if (m_total > kMaxConstructedIds) throw PreconditionError("constructed instance too large");

  DecisionInstance out;
  Instance& inst = out.instance;
  inst.n_count = static_cast<std::uint32_t>(n_total);
  inst.m_count = static_cast<std::uint32_t>(m_total);
  inst.machines = p3.r;  // r < 3r = |N| always
  inst.n_weights.assign(inst.n_count, 1);
  inst.m_weights.assign(inst.m_count, 1);
  inst.assoc.resize(inst.n_count);
  out.provenance.n_labels.resize(inst.n_count);
  out.provenance.m_labels.resize(inst.m_count);

  MId next = 1;
  for (std::uint32_t k = 1; k <= n_total; ++k) {
    out.provenance.n_labels[k - 1] = label("A", k);
    std::vector<MId> block;
    block.reserve(static_cast<std::size_t>(p3.a[k - 1] - 1));
    for (Weight t = 1; t < p3.a[k - 1]; ++t) {
      out.provenance.m_labels[next - 1] = label("A", k);
      block.push_back(next++);
    }
    inst.assoc[k - 1] = std::move(block);
  }

  out.target = p3.b;
  out.instance = validate_instance(std::move(out.instance));
  return out;
}

}  // namespace mwpsas
