// Copyright 2026 The GraphSort Authors.
//
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

// graphsort: sort number files, benchmark the graph sorters and dump the
// intermediate graphs as DOT.
//
// Exit codes: 0 success, 1 usage, 2 input/parse error, 3 internal invariant
// violation.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphsort/cli/bench.hpp"
#include "graphsort/cli/dot.hpp"
#include "graphsort/cli/io.hpp"
#include "graphsort/error.hpp"
#include "graphsort/sort.hpp"

namespace {

namespace gs = graphsort;
namespace gcli = graphsort::cli;

constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvariant = 3;

struct InvariantFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string algorithm = "graph";
  std::string visit_order = "min-first";
  std::optional<std::uint64_t> shuffle_seed;
};

gs::SortOptions<double> sort_options(const CommonOptions& c) {
  gs::SortOptions<double> opts;
  if (c.shuffle_seed) {
    opts.visit_order = gs::VisitOrder::shuffled;
    opts.shuffle_seed = *c.shuffle_seed;
  } else {
    opts.visit_order = c.visit_order == "index" ? gs::VisitOrder::index : gs::VisitOrder::min_first;
  }
  return opts;
}

void add_common(CLI::App* cmd, CommonOptions& c, bool allow_reference) {
  std::vector<std::string> algos{"trivial", "graph", "graph-merge"};
  if (allow_reference) algos.push_back("reference");
  cmd->add_option("--algorithm", c.algorithm, "Sorter to run")
      ->check(CLI::IsMember(algos))
      ->capture_default_str();
  cmd->add_option("--visit-order", c.visit_order, "First DFS visit order of graph")
      ->check(CLI::IsMember({"min-first", "index"}))
      ->capture_default_str();
  cmd->add_option("--shuffle-visits", c.shuffle_seed,
                  "Seeded random first DFS visit order (overrides --visit-order)");
}

int cmd_sort(const std::string& input, const std::optional<std::string>& out_path,
             const CommonOptions& common) {
  const auto tokens = gcli::read_token_file(input);
  const auto values = gcli::token_values(tokens);
  const auto algo = gcli::parse_algorithm(common.algorithm);
  if (algo == gcli::Algorithm::trivial && values.size() > gcli::kTrivialMaxN) {
    throw gcli::config_error("trivial is limited to n <= " + std::to_string(gcli::kTrivialMaxN));
  }
  const auto outcome = gcli::run_algorithm(algo, values, sort_options(common));
  if (!std::is_sorted(outcome.output.begin(), outcome.output.end())) {
    throw InvariantFailure("sorter returned an unsorted sequence");
  }
  if (out_path) {
    std::ofstream out(*out_path);
    if (!out) throw gcli::io_error("cannot write " + *out_path);
    gcli::write_tokens(out, tokens, outcome.permutation);
  } else {
    gcli::write_tokens(std::cout, tokens, outcome.permutation);
  }
  return 0;
}

int cmd_bench(gcli::BenchConfig cfg, const std::string& sizes, const std::string& distribution,
              const std::optional<std::string>& input, const std::vector<std::string>& algorithms,
              const CommonOptions& common) {
  cfg.algorithms.clear();
  for (const auto& a : algorithms) cfg.algorithms.push_back(gcli::parse_algorithm(a));
  if (input) {
    cfg.distribution = gcli::Distribution::file;
    cfg.fixed_input = gcli::token_values(gcli::read_token_file(*input));
  } else {
    cfg.distribution = gcli::parse_distribution(distribution);
    cfg.sizes = gcli::parse_sizes(sizes);
  }
  const auto opts = sort_options(common);
  cfg.visit_order = opts.visit_order;
  cfg.shuffle_seed = opts.shuffle_seed;
  gcli::validate(cfg);

  std::cout << gcli::kCsvHeader << '\n';
  for (const auto& row : gcli::run_bench(cfg)) {
    if (!row.sorted_ok) throw InvariantFailure("benchmark run produced an unsorted sequence");
    std::cout << gcli::to_csv(row) << '\n';
  }
  return 0;
}

int cmd_inspect(const std::string& input, const std::string& out_dir, std::size_t max_n,
                const CommonOptions& common) {
  const auto tokens = gcli::read_token_file(input);
  if (tokens.empty()) throw gcli::config_error("input holds no numbers");
  if (tokens.size() > max_n) {
    throw gcli::config_error("input has " + std::to_string(tokens.size()) +
                             " numbers; raise --max-n to render more than " +
                             std::to_string(max_n));
  }
  const auto files =
      gcli::render_stages(tokens, gcli::parse_algorithm(common.algorithm), sort_options(common));
  std::filesystem::create_directories(out_dir);
  for (const auto& f : files) {
    const auto path = std::filesystem::path(out_dir) / f.name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gcli::io_error("cannot write " + path.string());
    out << f.content;
    std::cout << path.string() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-based stable sorting: sort, benchmark and inspect"};
  app.require_subcommand(1);

  CommonOptions sort_common;
  std::string sort_input;
  std::optional<std::string> sort_out;
  auto* sort = app.add_subcommand("sort", "Sort a file of numbers, one per line");
  sort->add_option("file", sort_input, "Input file")->required();
  sort->add_option("--out", sort_out, "Output file (default: standard output)");
  add_common(sort, sort_common, false);

  CommonOptions bench_common;
  gcli::BenchConfig bench_cfg;
  std::vector<std::string> bench_algorithms{"graph"};
  std::string bench_sizes = "2^8..2^16";
  std::string bench_distribution = "random";
  std::optional<std::string> bench_input;
  auto* bench = app.add_subcommand("bench", "Instrumented benchmark, CSV on standard output");
  bench->add_option("--algorithm", bench_algorithms, "Sorters to run (repeat or comma-separate)")
      ->delimiter(',')
      ->check(CLI::IsMember({"trivial", "graph", "graph-merge", "reference"}))
      ->capture_default_str();
  bench->add_option("--sizes", bench_sizes, "Sizes: 1000 | 2^10 | 100,200 | 2^8..2^16")
      ->capture_default_str();
  bench->add_option("--distribution", bench_distribution, "Input distribution")
      ->check(CLI::IsMember({"random", "sorted", "reverse", "partial", "duplicates"}))
      ->capture_default_str();
  bench->add_option("--input", bench_input, "Benchmark a fixed input file instead");
  bench->add_option("--seed", bench_cfg.seed, "Generator seed")->capture_default_str();
  bench->add_option("--trials", bench_cfg.trials, "Trials per size")->capture_default_str();
  bench->add_option("--visit-order", bench_common.visit_order, "First DFS visit order of graph")
      ->check(CLI::IsMember({"min-first", "index"}))
      ->capture_default_str();
  bench->add_option("--shuffle-visits", bench_common.shuffle_seed,
                    "Seeded random first DFS visit order");

  CommonOptions inspect_common;
  std::string inspect_input;
  std::string inspect_out = ".";
  std::size_t inspect_max_n = 200;
  auto* inspect = app.add_subcommand("inspect", "Write one DOT file per algorithm stage");
  inspect->add_option("file", inspect_input, "Input file")->required();
  inspect->add_option("--out-dir", inspect_out, "Directory for the DOT files")
      ->capture_default_str();
  inspect->add_option("--max-n", inspect_max_n, "Refuse inputs longer than this")
      ->capture_default_str();
  add_common(inspect, inspect_common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sort) return cmd_sort(sort_input, sort_out, sort_common);
    if (*bench) {
      return cmd_bench(bench_cfg, bench_sizes, bench_distribution, bench_input, bench_algorithms,
                       bench_common);
    }
    if (*inspect) return cmd_inspect(inspect_input, inspect_out, inspect_max_n, inspect_common);
  } catch (const gcli::config_error& e) {
    std::cerr << "graphsort: " << e.what() << '\n';
    return kExitUsage;
  } catch (const gcli::parse_error& e) {
    std::cerr << "graphsort: parse error at " << e.what() << '\n';
    return kExitInput;
  } catch (const gcli::io_error& e) {
    std::cerr << "graphsort: " << e.what() << '\n';
    return kExitInput;
  } catch (const gs::graph_error& e) {
    std::cerr << "graphsort: internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const InvariantFailure& e) {
    std::cerr << "graphsort: internal invariant violated: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}
