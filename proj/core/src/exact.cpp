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

#include "mwpsas/exact.hpp"

#include <algorithm>
#include <numeric>

#include "mwpsas/approx.hpp"
#include "mwpsas/errors.hpp"

namespace mwpsas {

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first branch and bound over block assignments. One instance per
// solve; not reentrant.
class Search {
 public:
  Search(const Instance& inst, Weight prune_cap, Weight stop_at, Clock::time_point deadline)
      : inst_(inst),
        m_(inst.machines),
        prune_cap_(prune_cap),
        stop_at_(stop_at),
        deadline_(deadline) {
    // Largest single-element cost first; ties by id for determinism.
    order_.resize(inst.n_count);
    std::iota(order_.begin(), order_.end(), NId{1});
    std::vector<Weight> cost(inst.n_count);
    for (std::uint32_t i = 0; i < inst.n_count; ++i) {
      Weight c = inst.n_weights[i];
      for (MId j : inst.assoc[i]) c = checked_add(c, inst.m_weight(j));
      cost[i] = c;
    }
    std::sort(order_.begin(), order_.end(), [&](NId a, NId b) {
      if (cost[a - 1] != cost[b - 1]) return cost[a - 1] > cost[b - 1];
      return a < b;
    });

    terms_.assign(m_, 0);
    in_union_.assign(m_, std::vector<bool>(inst.m_count, false));
    assignment_.assign(inst.n_count, 0);
  }

  // Seeds the incumbent; `value` must equal the objective of `witness`.
  void seed(Partition witness, Weight value) {
    best_value_ = value;
    best_witness_ = std::move(witness);
  }

  void run() {
    if (best_value_ <= stop_at_) return;
    descend(0, 0, 0);
  }

  Weight best_value() const { return best_value_; }
  const Partition& best_witness() const { return best_witness_; }
  std::uint64_t nodes() const { return nodes_; }
  bool timed_out() const { return timed_out_; }

 private:
  bool bound_reached(Weight value) const { return value <= stop_at_; }

  void descend(std::uint32_t depth, std::uint32_t used, Weight running_max) {
    if (timed_out_ || bound_reached(best_value_)) return;
    if ((++nodes_ & 1023) == 0 && Clock::now() >= deadline_) {
      timed_out_ = true;
      return;
    }
    if (depth == inst_.n_count) {
      // used == m_ is guaranteed by the feasibility prune below.
      if (running_max < best_value_) {
        best_value_ = running_max;
        record_witness();
      }
      return;
    }

    const NId element = order_[depth];
    const std::uint32_t open_limit = std::min(used + 1, m_);
    const std::uint32_t remaining_after = inst_.n_count - depth - 1;
    for (std::uint32_t b = 0; b < open_limit; ++b) {
      const std::uint32_t used_after = std::max(used, b + 1);
      // Every block must end up non-empty.
      if (remaining_after < m_ - used_after) continue;

      Weight delta = inst_.n_weight(element);
      added_scratch_.clear();
      auto& membership = in_union_[b];
      for (MId j : inst_.assoc_of(element)) {
        if (!membership[j - 1]) {
          delta = checked_add(delta, inst_.m_weight(j));
          added_scratch_.push_back(j);
        }
      }
      const Weight new_term = checked_add(terms_[b], delta);
      const Weight new_max = std::max(running_max, new_term);
      if (new_max >= std::min(best_value_, prune_cap_)) continue;

      terms_[b] = new_term;
      for (MId j : added_scratch_) membership[j - 1] = true;
      assignment_[element - 1] = b;
      undo_stack_.push_back(added_scratch_);

      descend(depth + 1, used_after, new_max);

      for (MId j : undo_stack_.back()) membership[j - 1] = false;
      undo_stack_.pop_back();
      terms_[b] = checked_sub(new_term, delta);
      if (timed_out_ || bound_reached(best_value_)) return;
    }
  }

  void record_witness() {
    best_witness_.blocks.assign(m_, {});
    for (std::uint32_t i = 0; i < inst_.n_count; ++i)
      best_witness_.blocks[assignment_[i]].push_back(i + 1);
  }

  const Instance& inst_;
  const std::uint32_t m_;
  const Weight prune_cap_;
  const Weight stop_at_;
  const Clock::time_point deadline_;

  std::vector<NId> order_;
  std::vector<Weight> terms_;
  std::vector<std::vector<bool>> in_union_;
  std::vector<std::uint32_t> assignment_;
  std::vector<MId> added_scratch_;
  std::vector<std::vector<MId>> undo_stack_;

  Weight best_value_ = kWeightMax;
  Partition best_witness_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

ExactResult exact_solve(const Instance& inst, std::chrono::milliseconds time_budget) {
  const auto deadline = Clock::now() + time_budget;
  const Weight lb = lower_bound(inst);
  ApproxResult seed = approximate_partition(inst, strategy_whole(inst));

  Search search(inst, kWeightMax, lb, deadline);
  search.seed(std::move(seed.partition), seed.objective);
  search.run();

  ExactResult result;
  result.optimum = search.best_value();
  result.witness = search.best_witness();
  result.nodes_explored = search.nodes();
  result.timed_out = search.timed_out();
  return result;
}

Decision decide(const Instance& inst, Weight c, std::chrono::milliseconds time_budget) {
  const auto deadline = Clock::now() + time_budget;
  ApproxResult seed = approximate_partition(inst, strategy_whole(inst));
  if (seed.objective <= c) return Decision::yes;

  // Cap pruning at c+1: any partition at or below c settles the question, and
  // branches at or above c+1 can never help.
  const Weight cap = c == kWeightMax ? kWeightMax : c + 1;
  Search search(inst, cap, c, deadline);
  search.seed(std::move(seed.partition), seed.objective);
  search.run();

  if (search.best_value() <= c) return Decision::yes;
  if (search.timed_out()) return Decision::unknown;
  return Decision::no;
}

bool brute_force_clique(const Graph& graph, std::uint32_t k) {
  const Graph g = validate_graph(graph);
  if (k <= 1) throw PreconditionError("k must exceed 1");
  if (k > g.node_count) return false;

  std::vector<std::vector<bool>> adj(g.node_count + 1, std::vector<bool>(g.node_count + 1, false));
  for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = true;

  // Enumerate k-subsets; each chosen node must be adjacent to all earlier ones.
  std::vector<std::uint32_t> chosen;
  auto extend = [&](auto&& self, std::uint32_t next_min) -> bool {
    if (chosen.size() == k) return true;
    for (std::uint32_t v = next_min; v + (k - chosen.size()) <= g.node_count + 1; ++v) {
      bool ok = true;
      for (std::uint32_t u : chosen) {
        if (!adj[u][v]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(v);
      if (self(self, v + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(extend, 1);
}

bool brute_force_3partition(const Part3Instance& p3) {
  validate_part3(p3);
  const std::uint32_t count = 3 * p3.r;
  std::vector<bool> taken(count, false);

  // Build triples around the lowest untaken index; by the B/4 < a_k < B/2
  // bounds a feasible subset summing to B has exactly three members.
  auto place = [&](auto&& self, std::uint32_t placed) -> bool {
    if (placed == count) return true;
    std::uint32_t first = 0;
    while (taken[first]) ++first;
    taken[first] = true;
    for (std::uint32_t second = first + 1; second < count; ++second) {
      if (taken[second]) continue;
      taken[second] = true;
      for (std::uint32_t third = second + 1; third < count; ++third) {
        if (taken[third]) continue;
        if (p3.a[first] + p3.a[second] + p3.a[third] != p3.b) continue;
        taken[third] = true;
        if (self(self, placed + 3)) return true;
        taken[third] = false;
      }
      taken[second] = false;
    }
    taken[first] = false;
    return false;
  };
  return place(place, 0);
}

}  // namespace mwpsas
