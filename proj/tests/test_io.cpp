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

#include <doctest.h>

#include "mwpsas/errors.hpp"
#include "mwpsas/generator.hpp"
#include "mwpsas/io.hpp"
#include "mwpsas/reductions.hpp"
#include "mwpsas/rng.hpp"
#include "support/builders.hpp"

using namespace mwpsas;
using namespace mwpsas::testing;

TEST_CASE("parse_instance reads the minimal file") {
  const char* text =
      "MWPSAS 1\n"
      "N 2\nM 1\nm 1\n"
      "NP 1 1\nMP 1\n"
      "A 1 1 1\nA 2 1 1\n";
  CHECK(parse_instance(text) == tiny2());
}

TEST_CASE("comments and extra whitespace are ignored") {
  const char* text =
      "# tiny instance\n"
      "MWPSAS 1\n\n"
      "N 2   # two elements\n"
      "M 1\nm 1\n"
      "NP  1  1\nMP 1\n"
      "A 1 1 1\n"
      "A 2 1 1\n";
  CHECK(parse_instance(text) == tiny2());
}

TEST_CASE("instance round-trips through write/parse") {
  SplitMix64 rng(515);
  for (int round = 0; round < 20; ++round) {
    const auto variant = static_cast<Variant>(round % 3);
    const Instance inst = generate_instance(rng.next(), 6 + rng.below(5), 3 + rng.below(4), 2,
                                            variant == Variant::general ? 9 : 1, variant);
    CHECK(parse_instance(write_instance(inst)) == inst);
  }
}

TEST_CASE("syntax errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_instance("MWPSAS 2\n"), "SyntaxError: line 1: expected 'MWPSAS 1' header",
                       SyntaxError);
  // Duplicate A row for one id.
  const char* dup =
      "MWPSAS 1\nN 2\nM 1\nm 1\nNP 1 1\nMP 1\n"
      "A 1 1 1\nA 1 1 1\n";
  CHECK_THROWS_AS(parse_instance(dup), SyntaxError);
  // Announced count disagrees with the id list.
  const char* bad_count = "MWPSAS 1\nN 2\nM 1\nm 1\nNP 1 1\nMP 1\nA 1 2 1\nA 2 1 1\n";
  CHECK_THROWS_AS(parse_instance(bad_count), SyntaxError);
  // Semantic problems are not SyntaxErrors.
  const char* uncovered = "MWPSAS 1\nN 2\nM 1\nm 1\nNP 1 1\nMP 1\nA 1 0\nA 2 0\n";
  CHECK_THROWS_AS(parse_instance(uncovered), CoverageError);
}

TEST_CASE("partition files round-trip, with and without digest") {
  const Partition part{{{1, 2}, {3}}};
  const std::string bare = write_partition(part);
  CHECK(parse_partition(bare).partition == part);
  CHECK(parse_partition(bare).digest.empty());

  const std::string digest = instance_digest(weighted3());
  const PartitionFile file = parse_partition(write_partition(part, digest));
  CHECK(file.partition == part);
  CHECK(file.digest == digest);
}

TEST_CASE("graph and part3 files round-trip") {
  const Graph g = validate_graph(Graph{4, {{2, 4}, {1, 2}, {1, 3}}});
  CHECK(parse_graph(write_graph(g)) == g);
  CHECK_THROWS_AS(parse_graph("GRAPH 1\nV 3\nE 2 1\n"), SyntaxError);  // requires u < v
  CHECK_THROWS_AS(parse_graph("GRAPH 1\nV 3\nE 1 2\nE 1 2\n"), PreconditionError);

  const Part3Instance p3{2, 10, {3, 3, 4, 4, 3, 3}};
  CHECK(parse_part3(write_part3(p3)) == p3);
  CHECK_THROWS_AS(parse_part3("PART3 1\nr 1\nB 9\na 3 3\n"), SyntaxError);  // needs 3r values
}

TEST_CASE("decision files carry target, digest and labels") {
  const DecisionInstance dec = reduce_clique(Graph{3, {{1, 2}, {1, 3}, {2, 3}}}, 2);
  const DecisionFile file = parse_decision(write_decision(dec));
  CHECK(file.target == dec.target);
  CHECK(file.instance_digest == instance_digest(dec.instance));
  CHECK(file.n_labels == dec.provenance.n_labels);
  CHECK(file.m_labels == dec.provenance.m_labels);
}

TEST_CASE("writers are canonical: same value, same bytes") {
  const Instance inst = generate_instance(99, 8, 5, 3, 6, Variant::general);
  CHECK(write_instance(inst) == write_instance(parse_instance(write_instance(inst))));
  // Unsorted block contents do not change the bytes.
  CHECK(write_partition(Partition{{{2, 1}, {3}}}) == write_partition(Partition{{{1, 2}, {3}}}));
}

TEST_CASE("generator is deterministic and honors variant contracts") {
  const Instance a = generate_instance(1, 6, 4, 2, 5, Variant::general);
  const Instance b = generate_instance(1, 6, 4, 2, 5, Variant::general);
  CHECK(a == b);
  CHECK(write_instance(a) == write_instance(b));

  CHECK(is_m1_instance(generate_instance(7, 6, 3, 2, 1, Variant::m1)));
  CHECK(is_n1_instance(generate_instance(7, 4, 6, 2, 1, Variant::n1)));
}

TEST_CASE("generator rejects inconsistent parameters") {
  CHECK_THROWS_AS(generate_instance(1, 4, 2, 4, 5, Variant::general), ParameterError);
  CHECK_THROWS_AS(generate_instance(1, 4, 2, 0, 5, Variant::general), ParameterError);
  CHECK_THROWS_AS(generate_instance(1, 4, 2, 2, 0, Variant::general), ParameterError);
  CHECK_THROWS_AS(generate_instance(1, 3, 6, 2, 1, Variant::m1), ParameterError);
  CHECK_THROWS_AS(parse_variant("weird"), ParameterError);
}

TEST_CASE("digest is stable across semantically equal instances") {
  const Instance inst = weighted3();
  Instance shuffled = inst;
  shuffled.assoc[1] = {2, 1};  // writer sorts; digest unchanged
  CHECK(instance_digest(inst) == instance_digest(shuffled));
  CHECK(instance_digest(inst) != instance_digest(tiny2()));
  CHECK(instance_digest(inst).size() == 16);
}

TEST_CASE("run report prints the optional optimum only when present") {
  RunReport report;
  report.instance_digest = "abc";
  report.strategy = "whole";
  report.f_value = 13;
  report.d_value = 19;
  report.lower_bound = 10;
  report.deviation_bound = 9;
  const std::string without = write_run_report(report);
  CHECK(without.find("exact_optimum") == std::string::npos);
  report.exact_optimum = 12;
  CHECK(write_run_report(report).find("exact_optimum 12\n") != std::string::npos);
}
