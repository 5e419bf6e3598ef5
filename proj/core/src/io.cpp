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

#include "mwpsas/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "mwpsas/errors.hpp"

namespace mwpsas {

namespace {

struct Row {
  int line = 0;
  std::vector<std::string> tokens;
};

// Comment-stripped, whitespace-tokenized non-empty lines.
std::vector<Row> tokenize(std::string_view text) {
  std::vector<Row> rows;
  int line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    ++line;
    std::string_view raw = text.substr(pos, eol - pos);
    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    Row row;
    row.line = line;
    std::size_t t = 0;
    while (t < raw.size()) {
      while (t < raw.size() && std::isspace(static_cast<unsigned char>(raw[t]))) ++t;
      std::size_t start = t;
      while (t < raw.size() && !std::isspace(static_cast<unsigned char>(raw[t]))) ++t;
      if (t > start) row.tokens.emplace_back(raw.substr(start, t - start));
    }
    if (!row.tokens.empty()) rows.push_back(std::move(row));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return rows;
}

std::uint64_t parse_u64(const std::string& tok, int line, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw SyntaxError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return value;
}

std::uint32_t parse_u32(const std::string& tok, int line, const char* what) {
  std::uint64_t value = parse_u64(tok, line, what);
  if (value > 0xffffffffULL)
    throw SyntaxError(line, std::string(what) + " out of range: '" + tok + "'");
  return static_cast<std::uint32_t>(value);
}

// "<key> <single value>" row with an exact keyword.
const Row& expect_row(const std::vector<Row>& rows, std::size_t idx, const std::string& key,
                      std::size_t token_count) {
  if (idx >= rows.size()) throw SyntaxError(rows.empty() ? 1 : rows.back().line, "missing " + key + " row");
  const Row& row = rows[idx];
  if (row.tokens[0] != key)
    throw SyntaxError(row.line, "expected " + key + " row, got '" + row.tokens[0] + "'");
  if (token_count != 0 && row.tokens.size() != token_count)
    throw SyntaxError(row.line, key + " row needs " + std::to_string(token_count - 1) + " value(s)");
  return row;
}

void expect_header(const std::vector<Row>& rows, const char* magic) {
  if (rows.empty()) throw SyntaxError(1, std::string("missing '") + magic + " 1' header");
  const Row& head = rows[0];
  if (head.tokens.size() != 2 || head.tokens[0] != magic || head.tokens[1] != "1")
    throw SyntaxError(head.line, std::string("expected '") + magic + " 1' header");
}

void expect_end(const std::vector<Row>& rows, std::size_t idx) {
  if (idx < rows.size()) throw SyntaxError(rows[idx].line, "unexpected trailing row");
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const auto rows = tokenize(text);
  expect_header(rows, "MWPSAS");
  Instance inst;
  const Row& n_row = expect_row(rows, 1, "N", 2);
  inst.n_count = parse_u32(n_row.tokens[1], n_row.line, "N count");
  const Row& m_row = expect_row(rows, 2, "M", 2);
  inst.m_count = parse_u32(m_row.tokens[1], m_row.line, "M count");
  const Row& mach_row = expect_row(rows, 3, "m", 2);
  inst.machines = parse_u32(mach_row.tokens[1], mach_row.line, "machine count");

  const Row& np = expect_row(rows, 4, "NP", 0);
  if (np.tokens.size() != std::size_t{inst.n_count} + 1)
    throw SyntaxError(np.line, "NP row needs " + std::to_string(inst.n_count) + " weights");
  for (std::size_t t = 1; t < np.tokens.size(); ++t)
    inst.n_weights.push_back(parse_u64(np.tokens[t], np.line, "weight"));

  const Row& mp = expect_row(rows, 5, "MP", 0);
  if (mp.tokens.size() != std::size_t{inst.m_count} + 1)
    throw SyntaxError(mp.line, "MP row needs " + std::to_string(inst.m_count) + " weights");
  for (std::size_t t = 1; t < mp.tokens.size(); ++t)
    inst.m_weights.push_back(parse_u64(mp.tokens[t], mp.line, "weight"));

  inst.assoc.resize(inst.n_count);
  std::size_t idx = 6;
  for (std::uint32_t i = 1; i <= inst.n_count; ++i, ++idx) {
    const Row& row = expect_row(rows, idx, "A", 0);
    if (row.tokens.size() < 3) throw SyntaxError(row.line, "A row needs '<i> <k> <ids...>'");
    const std::uint32_t id = parse_u32(row.tokens[1], row.line, "N-id");
    if (id != i)
      throw SyntaxError(row.line, "A rows must list each N-id exactly once in ascending order; "
                                  "expected id " + std::to_string(i) + ", got " + std::to_string(id));
    const std::uint32_t k = parse_u32(row.tokens[2], row.line, "association count");
    if (row.tokens.size() != std::size_t{k} + 3)
      throw SyntaxError(row.line, "A row announces " + std::to_string(k) + " ids but carries " +
                                  std::to_string(row.tokens.size() - 3));
    auto& ids = inst.assoc[i - 1];
    for (std::size_t t = 3; t < row.tokens.size(); ++t) {
      MId j = parse_u32(row.tokens[t], row.line, "M-id");
      if (std::find(ids.begin(), ids.end(), j) != ids.end())
        throw SyntaxError(row.line, "duplicate M-id " + std::to_string(j) + " in A row");
      ids.push_back(j);
    }
  }
  expect_end(rows, idx);
  return validate_instance(std::move(inst));
}

std::string write_instance(const Instance& inst) {
  std::ostringstream out;
  out << "MWPSAS 1\n";
  out << "N " << inst.n_count << "\n";
  out << "M " << inst.m_count << "\n";
  out << "m " << inst.machines << "\n";
  out << "NP";
  for (Weight w : inst.n_weights) out << ' ' << w;
  out << "\nMP";
  for (Weight w : inst.m_weights) out << ' ' << w;
  out << '\n';
  for (std::uint32_t i = 1; i <= inst.n_count; ++i) {
    auto ids = inst.assoc[i - 1];
    std::sort(ids.begin(), ids.end());
    out << "A " << i << ' ' << ids.size();
    for (MId j : ids) out << ' ' << j;
    out << '\n';
  }
  return out.str();
}

PartitionFile parse_partition(std::string_view text) {
  const auto rows = tokenize(text);
  expect_header(rows, "PARTITION");
  PartitionFile file;
  std::size_t idx = 1;
  if (idx < rows.size() && rows[idx].tokens[0] == "DIGEST") {
    if (rows[idx].tokens.size() != 2) throw SyntaxError(rows[idx].line, "DIGEST row needs 1 value");
    file.digest = rows[idx].tokens[1];
    ++idx;
  }
  bool any = false;
  for (; idx < rows.size(); ++idx) {
    const Row& row = rows[idx];
    if (row.tokens[0] != "S")
      throw SyntaxError(row.line, "expected S row, got '" + row.tokens[0] + "'");
    if (row.tokens.size() < 2) throw SyntaxError(row.line, "S row needs '<e> <ids...>'");
    const std::uint32_t count = parse_u32(row.tokens[1], row.line, "block size");
    if (row.tokens.size() != std::size_t{count} + 2)
      throw SyntaxError(row.line, "S row announces " + std::to_string(count) + " ids but carries " +
                                  std::to_string(row.tokens.size() - 2));
    std::vector<NId> block;
    for (std::size_t t = 2; t < row.tokens.size(); ++t)
      block.push_back(parse_u32(row.tokens[t], row.line, "N-id"));
    file.partition.blocks.push_back(std::move(block));
    any = true;
  }
  if (!any) throw SyntaxError(rows.back().line, "partition has no S rows");
  return file;
}

Partition parse_partition_blocks(std::string_view text) {
  return parse_partition(text).partition;
}

std::string write_partition(const Partition& part, std::string_view digest) {
  std::ostringstream out;
  out << "PARTITION 1\n";
  if (!digest.empty()) out << "DIGEST " << digest << "\n";
  for (const auto& block : part.blocks) {
    auto ids = block;
    std::sort(ids.begin(), ids.end());
    out << "S " << ids.size();
    for (NId i : ids) out << ' ' << i;
    out << '\n';
  }
  return out.str();
}

Graph parse_graph(std::string_view text) {
  const auto rows = tokenize(text);
  expect_header(rows, "GRAPH");
  Graph g;
  const Row& v_row = expect_row(rows, 1, "V", 2);
  g.node_count = parse_u32(v_row.tokens[1], v_row.line, "node count");
  for (std::size_t idx = 2; idx < rows.size(); ++idx) {
    const Row& row = rows[idx];
    if (row.tokens[0] != "E")
      throw SyntaxError(row.line, "expected E row, got '" + row.tokens[0] + "'");
    if (row.tokens.size() != 3) throw SyntaxError(row.line, "E row needs '<u> <v>'");
    const std::uint32_t u = parse_u32(row.tokens[1], row.line, "node id");
    const std::uint32_t v = parse_u32(row.tokens[2], row.line, "node id");
    if (u >= v) throw SyntaxError(row.line, "E rows require u < v");
    g.edges.emplace_back(u, v);
  }
  return validate_graph(std::move(g));
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << "GRAPH 1\n";
  out << "V " << g.node_count << "\n";
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) out << "E " << u << ' ' << v << "\n";
  return out.str();
}

Part3Instance parse_part3(std::string_view text) {
  const auto rows = tokenize(text);
  expect_header(rows, "PART3");
  Part3Instance p3;
  const Row& r_row = expect_row(rows, 1, "r", 2);
  p3.r = parse_u32(r_row.tokens[1], r_row.line, "r");
  const Row& b_row = expect_row(rows, 2, "B", 2);
  p3.b = parse_u64(b_row.tokens[1], b_row.line, "B");
  const Row& a = expect_row(rows, 3, "a", 0);
  if (a.tokens.size() != std::size_t{3} * p3.r + 1)
    throw SyntaxError(a.line, "a row needs " + std::to_string(3 * p3.r) + " integers");
  for (std::size_t t = 1; t < a.tokens.size(); ++t)
    p3.a.push_back(parse_u64(a.tokens[t], a.line, "integer"));
  expect_end(rows, 4);
  return p3;
}

std::string write_part3(const Part3Instance& p3) {
  std::ostringstream out;
  out << "PART3 1\n";
  out << "r " << p3.r << "\n";
  out << "B " << p3.b << "\n";
  out << "a";
  for (Weight ak : p3.a) out << ' ' << ak;
  out << '\n';
  return out.str();
}

std::string write_decision(const DecisionInstance& dec) {
  std::ostringstream out;
  out << "DECISION 1\n";
  out << "TARGET " << dec.target << "\n";
  out << "INSTANCE " << instance_digest(dec.instance) << "\n";
  for (std::size_t i = 0; i < dec.provenance.n_labels.size(); ++i)
    out << "NL " << (i + 1) << ' ' << dec.provenance.n_labels[i] << "\n";
  for (std::size_t j = 0; j < dec.provenance.m_labels.size(); ++j)
    out << "ML " << (j + 1) << ' ' << dec.provenance.m_labels[j] << "\n";
  return out.str();
}

DecisionFile parse_decision(std::string_view text) {
  const auto rows = tokenize(text);
  expect_header(rows, "DECISION");
  DecisionFile file;
  const Row& target_row = expect_row(rows, 1, "TARGET", 2);
  file.target = parse_u64(target_row.tokens[1], target_row.line, "target");
  file.instance_digest = expect_row(rows, 2, "INSTANCE", 2).tokens[1];
  std::size_t idx = 3;
  for (; idx < rows.size() && rows[idx].tokens[0] == "NL"; ++idx) {
    const Row& row = rows[idx];
    if (row.tokens.size() != 3) throw SyntaxError(row.line, "NL row needs '<id> <label>'");
    if (parse_u32(row.tokens[1], row.line, "N-id") != file.n_labels.size() + 1)
      throw SyntaxError(row.line, "NL rows must be consecutive from 1");
    file.n_labels.push_back(row.tokens[2]);
  }
  for (; idx < rows.size() && rows[idx].tokens[0] == "ML"; ++idx) {
    const Row& row = rows[idx];
    if (row.tokens.size() != 3) throw SyntaxError(row.line, "ML row needs '<id> <label>'");
    if (parse_u32(row.tokens[1], row.line, "M-id") != file.m_labels.size() + 1)
      throw SyntaxError(row.line, "ML rows must be consecutive from 1");
    file.m_labels.push_back(row.tokens[2]);
  }
  expect_end(rows, idx);
  return file;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string instance_digest(const Instance& inst) {
  const std::uint64_t hash = fnv1a64(write_instance(inst));
  static const char* hex = "0123456789abcdef";
  std::string digest(16, '0');
  for (int i = 0; i < 16; ++i) digest[15 - i] = hex[(hash >> (4 * i)) & 0xf];
  return digest;
}

std::string write_run_report(const RunReport& report) {
  std::ostringstream out;
  out << "instance_digest " << report.instance_digest << "\n";
  out << "strategy " << report.strategy << "\n";
  out << "f_value " << report.f_value << "\n";
  out << "d_value " << report.d_value << "\n";
  out << "lower_bound " << report.lower_bound << "\n";
  out << "deviation_bound " << report.deviation_bound << "\n";
  if (report.exact_optimum) out << "exact_optimum " << *report.exact_optimum << "\n";
  out << "elapsed_ms " << report.elapsed.count() << "\n";
  return out.str();
}

}  // namespace mwpsas
