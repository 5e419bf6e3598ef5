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

#include "mwpsas_cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "mwpsas/approx.hpp"
#include "mwpsas/errors.hpp"
#include "mwpsas/exact.hpp"
#include "mwpsas/generator.hpp"
#include "mwpsas/io.hpp"
#include "mwpsas/model.hpp"
#include "mwpsas/reductions.hpp"
#include "mwpsas/sched_view.hpp"

namespace mwpsas {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error("IoError", "cannot write '" + path + "'");
}

InitialPartition make_strategy(const Instance& inst, const std::string& name) {
  if (name == "whole") return strategy_whole(inst);
  if (name == "singletons") return strategy_singletons(inst);
  if (name == "group-m1") return strategy_group_m1(inst);
  throw ParameterError("unknown strategy '" + name + "'");
}

std::chrono::milliseconds ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

struct Options {
  std::string instance_path;
  std::string partition_path;
  std::string graph_path;
  std::string part3_path;
  std::string out_path;
  std::string strategy = "whole";
  std::string variant = "general";
  bool with_exact = false;
  std::uint64_t time_budget_ms = 10000;
  std::uint64_t seed = 0;
  std::uint32_t gen_n = 0;
  std::uint32_t gen_m = 0;
  std::uint32_t gen_machines = 0;
  std::uint64_t gen_max_weight = 1;
  std::uint32_t clique_k = 0;
};

int cmd_solve(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_file(opt.instance_path));
  const InitialPartition init = make_strategy(inst, opt.strategy);
  const auto start = Clock::now();
  const ApproxResult res = approximate_partition(inst, init);
  const BoundReport bounds = deviation_bound(inst, init);

  RunReport report;
  report.instance_digest = instance_digest(inst);
  report.strategy = opt.strategy;
  report.f_value = res.objective;
  report.d_value = bounds.d_value;
  report.lower_bound = bounds.lower_bound;
  report.deviation_bound = bounds.deviation_bound;

  bool exact_timed_out = false;
  if (opt.with_exact) {
    const ExactResult exact = exact_solve(inst, std::chrono::milliseconds(opt.time_budget_ms));
    if (exact.timed_out) {
      exact_timed_out = true;
    } else {
      report.exact_optimum = exact.optimum;
      if (checked_sub(res.objective, exact.optimum) > bounds.deviation_bound)
        throw InternalInvariantError("deviation bound violated");
    }
  }
  report.elapsed = ms_since(start);

  if (!opt.out_path.empty())
    write_file(opt.out_path, write_partition(res.partition, report.instance_digest));
  out << write_run_report(report);
  if (exact_timed_out) out << "exact_timed_out 1\n";
  out << "blocks " << res.partition.blocks.size() << "\n";
  return 0;
}

int cmd_exact(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_file(opt.instance_path));
  const auto start = Clock::now();
  const ExactResult res = exact_solve(inst, std::chrono::milliseconds(opt.time_budget_ms));
  // Self-check: the reported value must match a fresh evaluation of the witness.
  if (evaluate_objective(inst, res.witness) != res.optimum)
    throw InternalInvariantError("witness does not evaluate to the reported optimum");

  const std::string digest = instance_digest(inst);
  if (!opt.out_path.empty()) write_file(opt.out_path, write_partition(res.witness, digest));
  out << "instance_digest " << digest << "\n";
  out << "optimum " << res.optimum << "\n";
  out << "timed_out " << (res.timed_out ? 1 : 0) << "\n";
  out << "nodes_explored " << res.nodes_explored << "\n";
  out << "elapsed_ms " << ms_since(start).count() << "\n";
  return 0;
}

int cmd_bound(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_file(opt.instance_path));
  const BoundReport bounds = deviation_bound(inst, make_strategy(inst, opt.strategy));
  out << "instance_digest " << instance_digest(inst) << "\n";
  out << "strategy " << opt.strategy << "\n";
  out << "d_value " << bounds.d_value << "\n";
  out << "lower_bound " << bounds.lower_bound << "\n";
  out << "deviation_bound " << bounds.deviation_bound << "\n";
  return 0;
}

int emit_decision(const DecisionInstance& dec, const std::string& out_prefix, std::ostream& out) {
  const std::string instance_file = out_prefix + ".mwp";
  const std::string decision_file = out_prefix + ".dec";
  write_file(instance_file, write_instance(dec.instance));
  write_file(decision_file, write_decision(dec));
  out << "instance_file " << instance_file << "\n";
  out << "decision_file " << decision_file << "\n";
  out << "instance_digest " << instance_digest(dec.instance) << "\n";
  out << "target " << dec.target << "\n";
  out << "n_count " << dec.instance.n_count << "\n";
  out << "m_count " << dec.instance.m_count << "\n";
  out << "machines " << dec.instance.machines << "\n";
  return 0;
}

int cmd_gen(const Options& opt, std::ostream& out) {
  const Instance inst = generate_instance(opt.seed, opt.gen_n, opt.gen_m, opt.gen_machines,
                                          opt.gen_max_weight, parse_variant(opt.variant));
  const std::string text = write_instance(inst);
  if (opt.out_path.empty()) {
    out << text;
    return 0;
  }
  write_file(opt.out_path, text);
  out << "instance_file " << opt.out_path << "\n";
  out << "instance_digest " << instance_digest(inst) << "\n";
  out << "n_count " << inst.n_count << "\n";
  out << "m_count " << inst.m_count << "\n";
  out << "machines " << inst.machines << "\n";
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_file(opt.instance_path));
  const PartitionFile file = parse_partition(read_file(opt.partition_path));
  const std::string digest = instance_digest(inst);
  if (!file.digest.empty() && file.digest != digest)
    throw DigestMismatchError("partition names instance " + file.digest + ", got " + digest);
  const Weight objective = evaluate_objective(inst, file.partition);
  out << "instance_digest " << digest << "\n";
  out << "blocks " << file.partition.blocks.size() << "\n";
  out << "objective " << objective << "\n";
  out << "digest_checked " << (file.digest.empty() ? 0 : 1) << "\n";
  out << "valid 1\n";
  return 0;
}

int cmd_lpt(const Options& opt, std::ostream& out) {
  const Instance inst = parse_instance(read_file(opt.instance_path));
  const auto start = Clock::now();
  const LptResult res = lpt_partition(inst);
  if (!opt.out_path.empty())
    write_file(opt.out_path, write_partition(res.partition, instance_digest(inst)));
  out << "instance_digest " << instance_digest(inst) << "\n";
  out << "strategy lpt\n";
  out << "f_value " << res.makespan << "\n";
  out << "lower_bound " << lower_bound(inst) << "\n";
  out << "blocks " << res.partition.blocks.size() << "\n";
  out << "elapsed_ms " << ms_since(start).count() << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"MWPSAS: minimum-weight partitioning of a set with associated subsets"};
  app.require_subcommand(1);
  Options opt;

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", opt.instance_path, "instance file (MWPSAS 1 format)")
        ->required();
  };
  const std::vector<std::string> strategies{"whole", "singletons", "group-m1"};

  CLI::App* solve = app.add_subcommand("solve", "run the guaranteed-deviation greedy solver");
  add_instance(solve);
  solve->add_option("--strategy", opt.strategy, "initial partition strategy")
      ->check(CLI::IsMember(strategies));
  solve->add_flag("--exact", opt.with_exact, "also compute the exact optimum");
  solve->add_option("--time-budget-ms", opt.time_budget_ms, "budget for --exact");
  solve->add_option("--partition-out", opt.out_path, "write the partition to this file");

  CLI::App* exact = app.add_subcommand("exact", "branch-and-bound exact solver");
  add_instance(exact);
  exact->add_option("--time-budget-ms", opt.time_budget_ms, "wall-clock budget");
  exact->add_option("--partition-out", opt.out_path, "write the witness to this file");

  CLI::App* bound = app.add_subcommand("bound", "report D, the lower bound and the deviation bound");
  add_instance(bound);
  bound->add_option("--strategy", opt.strategy, "initial partition strategy")
      ->check(CLI::IsMember(strategies));

  CLI::App* reduce = app.add_subcommand("reduce", "build decision instances from other problems");
  reduce->require_subcommand(1);
  CLI::App* clique = reduce->add_subcommand("clique", "from a graph and clique size k");
  clique->add_option("--graph", opt.graph_path, "graph file (GRAPH 1 format)")->required();
  clique->add_option("--k", opt.clique_k, "clique size (k > 1)")->required();
  clique->add_option("--out", opt.out_path, "output prefix for .mwp/.dec")->required();
  CLI::App* p3m1 = reduce->add_subcommand("part3-m1", "3-partition to the M1 variant");
  p3m1->add_option("--part3", opt.part3_path, "input file (PART3 1 format)")->required();
  p3m1->add_option("--out", opt.out_path, "output prefix for .mwp/.dec")->required();
  CLI::App* p3n1 = reduce->add_subcommand("part3-n1", "3-partition to the N1 variant");
  p3n1->add_option("--part3", opt.part3_path, "input file (PART3 1 format)")->required();
  p3n1->add_option("--out", opt.out_path, "output prefix for .mwp/.dec")->required();

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("--seed", opt.seed, "RNG seed")->required();
  gen->add_option("--n", opt.gen_n, "|N|")->required();
  gen->add_option("--m-set", opt.gen_m, "|M|")->required();
  gen->add_option("--machines", opt.gen_machines, "number of blocks")->required();
  gen->add_option("--max-weight", opt.gen_max_weight, "weight bound (general variant)");
  gen->add_option("--variant", opt.variant, "general, m1 or n1")
      ->check(CLI::IsMember({"general", "m1", "n1"}));
  gen->add_option("--out", opt.out_path, "instance file to write (default: stdout)");

  CLI::App* verify = app.add_subcommand("verify", "validate a partition and report its objective");
  add_instance(verify);
  verify->add_option("--partition", opt.partition_path, "partition file")->required();

  CLI::App* lpt = app.add_subcommand("lpt", "longest-processing-time baseline (N1 instances)");
  add_instance(lpt);
  lpt->add_option("--partition-out", opt.out_path, "write the partition to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(opt, out);
    if (exact->parsed()) return cmd_exact(opt, out);
    if (bound->parsed()) return cmd_bound(opt, out);
    if (reduce->parsed()) {
      if (clique->parsed())
        return emit_decision(reduce_clique(parse_graph(read_file(opt.graph_path)), opt.clique_k),
                             opt.out_path, out);
      const Part3Instance p3 = parse_part3(read_file(opt.part3_path));
      return emit_decision(p3m1->parsed() ? reduce_part3_m1(p3) : reduce_part3_n1(p3),
                           opt.out_path, out);
    }
    if (gen->parsed()) return cmd_gen(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out);
    if (lpt->parsed()) return cmd_lpt(opt, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace mwpsas
