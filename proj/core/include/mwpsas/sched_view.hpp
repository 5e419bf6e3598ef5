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

#ifndef MWPSAS_SCHED_VIEW_HPP_
#define MWPSAS_SCHED_VIEW_HPP_

#include "mwpsas/model.hpp"

namespace mwpsas {

/// An N1 instance seen as identical-parallel-machine makespan minimization:
/// one job per N-element with duration |M(j)| + 1. Because the M(j) of an N1
/// instance are disjoint unit-weight sets, the makespan of any machine
/// assignment equals the objective of the corresponding partition.
struct MachineJobSet {
  std::vector<Weight> durations;  // index j-1 holds d_j = |M(j)| + 1
  std::uint32_t machines = 0;
};

/// Throws VariantError unless is_n1_instance(inst).
MachineJobSet to_parallel_machines(const Instance& inst);

struct LptResult {
  Partition partition;
  Weight makespan = 0;
};

/// Longest-processing-time baseline for N1 instances: jobs sorted by
/// duration descending (ties by smaller id), each assigned to the currently
/// least-loaded machine (ties by smaller machine index). Returns the induced
/// partition and its objective. Throws VariantError on non-N1 input.
LptResult lpt_partition(const Instance& inst);

}  // namespace mwpsas

#endif  // MWPSAS_SCHED_VIEW_HPP_
