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

#include "mwpsas/sched_view.hpp"

#include <algorithm>
#include <numeric>

#include "mwpsas/errors.hpp"

namespace mwpsas {

MachineJobSet to_parallel_machines(const Instance& inst) {
  if (!is_n1_instance(inst))
    throw VariantError("parallel-machine view requires an N1 instance");
  MachineJobSet jobs;
  jobs.machines = inst.machines;
  jobs.durations.reserve(inst.n_count);
  for (const auto& ids : inst.assoc) jobs.durations.push_back(ids.size() + 1);
  return jobs;
}

LptResult lpt_partition(const Instance& inst) {
  const MachineJobSet jobs = to_parallel_machines(inst);
  const std::uint32_t m = jobs.machines;

  std::vector<NId> order(inst.n_count);
  std::iota(order.begin(), order.end(), NId{1});
  std::sort(order.begin(), order.end(), [&](NId a, NId b) {
    if (jobs.durations[a - 1] != jobs.durations[b - 1])
      return jobs.durations[a - 1] > jobs.durations[b - 1];
    return a < b;
  });

  std::vector<Weight> load(m, 0);
  std::vector<std::vector<NId>> blocks(m);
  for (NId j : order) {
    std::size_t target = 0;
    for (std::size_t b = 1; b < m; ++b)
      if (load[b] < load[target]) target = b;
    load[target] = checked_add(load[target], jobs.durations[j - 1]);
    blocks[target].push_back(j);
  }

  // Validation guarantees |N| > machines, and the first m jobs land on m
  // distinct machines, so empty blocks cannot occur; keep the repair path as
  // a mirror of the solver's phase-2 split in case that ever changes.
  for (std::size_t b = 0; b < m; ++b) {
    if (!blocks[b].empty()) continue;
    std::size_t donor = 0;
    for (std::size_t x = 1; x < m; ++x)
      if (blocks[x].size() > blocks[donor].size()) donor = x;
    auto smallest = std::min_element(blocks[donor].begin(), blocks[donor].end());
    blocks[b].push_back(*smallest);
    blocks[donor].erase(smallest);
  }

  LptResult result;
  for (auto& b : blocks) {
    std::sort(b.begin(), b.end());
    result.partition.blocks.push_back(std::move(b));
  }
  result.makespan = evaluate_objective(inst, result.partition);
  return result;
}

}  // namespace mwpsas
