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
//
// Line-oriented text formats. All of them are UTF-8 with '#' comments and
// whitespace-separated tokens, and every writer is canonical: identical
// inputs produce byte-identical output, so the fixtures are golden-file
// testable.
//
//   MWPSAS 1        instance: N/M/m counts, NP/MP weight rows, one A row
//                   per N-id ascending ("A <i> <k> <j1> ... <jk>")
//   PARTITION 1     optional "DIGEST <hex>", then "S <e> <i1> ... <ie>" rows
//   GRAPH 1         "V <n>", then "E <u> <v>" rows with u < v
//   PART3 1         "r <r>", "B <b>", "a <a1> ... <a3r>"
//   DECISION 1      "TARGET <c>", "INSTANCE <hex>", then NL/ML label rows
//
// Reports are flat "key value" lines for scriptability.

#ifndef MWPSAS_IO_HPP_
#define MWPSAS_IO_HPP_

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

#include "mwpsas/model.hpp"
#include "mwpsas/reductions.hpp"

namespace mwpsas {

/// Parses and validates an instance. Throws SyntaxError (with line number)
/// on malformed text; semantic problems surface through validate_instance.
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

struct PartitionFile {
  Partition partition;
  std::string digest;  // empty when the file carries no DIGEST row
};

Partition  // syntactic shape only; evaluate_objective checks the semantics
parse_partition_blocks(std::string_view text);
PartitionFile parse_partition(std::string_view text);
std::string write_partition(const Partition& part, std::string_view digest = {});

Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& g);

Part3Instance parse_part3(std::string_view text);
std::string write_part3(const Part3Instance& p3);

/// Target + provenance side of a DecisionInstance; the instance itself
/// travels in its own MWPSAS file, tied back by digest.
struct DecisionFile {
  Weight target = 0;
  std::string instance_digest;
  std::vector<std::string> n_labels;
  std::vector<std::string> m_labels;
};

std::string write_decision(const DecisionInstance& dec);
DecisionFile parse_decision(std::string_view text);

/// FNV-1a 64 of the canonical instance text, as 16 lowercase hex digits.
std::string instance_digest(const Instance& inst);
std::uint64_t fnv1a64(std::string_view bytes);

/// Per-run summary emitted by the solve/lpt subcommands.
struct RunReport {
  std::string instance_digest;
  std::string strategy;
  Weight f_value = 0;
  Weight d_value = 0;
  Weight lower_bound = 0;
  Weight deviation_bound = 0;
  std::optional<Weight> exact_optimum;
  std::chrono::milliseconds elapsed{0};
};

std::string write_run_report(const RunReport& report);

}  // namespace mwpsas

#endif  // MWPSAS_IO_HPP_
