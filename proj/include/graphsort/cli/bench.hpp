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

#ifndef GRAPHSORT_CLI_BENCH_HPP
#define GRAPHSORT_CLI_BENCH_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graphsort/sort.hpp"

namespace graphsort::cli {

enum class Algorithm { trivial, graph, graph_merge, reference };
enum class Distribution { random, sorted, reverse, partial, duplicates, file };

// trivial builds n(n-1)/2 arcs with a quadratic insertion scan each; past
// this size a single run takes minutes.
inline constexpr std::size_t kTrivialMaxN = 4096;

class config_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::trivial: return "trivial";
    case Algorithm::graph: return "graph";
    case Algorithm::graph_merge: return "graph-merge";
    case Algorithm::reference: return "reference";
  }
  return "?";
}

inline std::string_view to_string(Distribution d) {
  switch (d) {
    case Distribution::random: return "random";
    case Distribution::sorted: return "sorted";
    case Distribution::reverse: return "reverse";
    case Distribution::partial: return "partial";
    case Distribution::duplicates: return "duplicates";
    case Distribution::file: return "file";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view s) {
  for (auto a : {Algorithm::trivial, Algorithm::graph, Algorithm::graph_merge, Algorithm::reference}) {
    if (to_string(a) == s) return a;
  }
  throw config_error("unknown algorithm '" + std::string(s) + "'");
}

inline Distribution parse_distribution(std::string_view s) {
  for (auto d : {Distribution::random, Distribution::sorted, Distribution::reverse,
                 Distribution::partial, Distribution::duplicates}) {
    if (to_string(d) == s) return d;
  }
  throw config_error("unknown distribution '" + std::string(s) + "'");
}

namespace detail {

inline std::size_t parse_size_term(std::string_view s) {
  auto to_num = [&](std::string_view t) -> std::size_t {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string_view::npos) {
      throw config_error("bad size '" + std::string(s) + "'");
    }
    return std::stoull(std::string(t));
  };
  if (const auto caret = s.find('^'); caret != std::string_view::npos) {
    const std::size_t base = to_num(s.substr(0, caret));
    const std::size_t exp = to_num(s.substr(caret + 1));
    if (exp > 40) throw config_error("size exponent too large in '" + std::string(s) + "'");
    std::size_t v = 1;
    for (std::size_t i = 0; i < exp; ++i) v *= base;
    return v;
  }
  return to_num(s);
}

}  // namespace detail

/// "1000", "2^10", "100,200,300" or "2^8..2^16" (every power of two in the
/// range; a range needs both ends as 2^k).
inline std::vector<std::size_t> parse_sizes(std::string_view spec) {
  std::vector<std::size_t> sizes;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto comma = spec.find(',', pos);
    const auto item = spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos
                                                                       : comma - pos);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto lo = item.substr(0, dots);
      const auto hi = item.substr(dots + 2);
      if (!lo.starts_with("2^") || !hi.starts_with("2^")) {
        throw config_error("size range must be written 2^a..2^b");
      }
      const std::size_t a = detail::parse_size_term(lo.substr(2));
      const std::size_t b = detail::parse_size_term(hi.substr(2));
      if (a > b || b > 40) throw config_error("bad size range '" + std::string(item) + "'");
      for (std::size_t e = a; e <= b; ++e) sizes.push_back(std::size_t{1} << e);
    } else {
      sizes.push_back(detail::parse_size_term(item));
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return sizes;
}

struct BenchConfig {
  std::vector<Algorithm> algorithms{Algorithm::graph};
  std::vector<std::size_t> sizes;
  Distribution distribution = Distribution::random;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  VisitOrder visit_order = VisitOrder::min_first;
  std::uint64_t shuffle_seed = 0;
  // Used instead of generated data when distribution == file.
  std::vector<double> fixed_input;
};

inline void validate(const BenchConfig& cfg) {
  if (cfg.algorithms.empty()) throw config_error("no algorithm selected");
  if (cfg.trials == 0) throw config_error("trials must be positive");
  if (cfg.distribution == Distribution::file) {
    if (cfg.fixed_input.empty()) throw config_error("input file holds no numbers");
  } else if (cfg.sizes.empty()) {
    throw config_error("no sizes given");
  }
  const std::size_t largest =
      cfg.distribution == Distribution::file
          ? cfg.fixed_input.size()
          : *std::max_element(cfg.sizes.begin(), cfg.sizes.end());
  for (auto a : cfg.algorithms) {
    if (a == Algorithm::trivial && largest > kTrivialMaxN) {
      throw config_error("trivial is limited to n <= " + std::to_string(kTrivialMaxN));
    }
  }
  if (cfg.distribution != Distribution::file) {
    for (auto n : cfg.sizes) {
      if (n == 0) throw config_error("sizes must be positive");
    }
  }
}

/// Deterministic input for (seed, n, trial).
inline std::vector<double> generate(Distribution d, std::size_t n, std::uint64_t seed,
                                    std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::vector<double> v(n);
  switch (d) {
    case Distribution::random: {
      std::uniform_real_distribution<double> dist(0.0, 1.0);
      for (auto& x : v) x = dist(rng);
      break;
    }
    case Distribution::sorted:
      std::iota(v.begin(), v.end(), 0.0);
      break;
    case Distribution::reverse:
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(n - 1 - i);
      break;
    case Distribution::partial: {
      std::iota(v.begin(), v.end(), 0.0);
      if (n >= 2) {
        std::uniform_int_distribution<std::size_t> pick(0, n - 2);
        for (std::size_t s = 0; s < n / 20; ++s) {
          const std::size_t i = pick(rng);
          std::swap(v[i], v[i + 1]);
        }
      }
      break;
    }
    case Distribution::duplicates: {
      std::uniform_int_distribution<int> symbol(0, 15);
      for (auto& x : v) x = symbol(rng);
      break;
    }
    case Distribution::file:
      throw config_error("file distribution has no generator");
  }
  return v;
}

/// Runs one algorithm. The reference is std::stable_sort on positions with a
/// counting comparator, reported in the same outcome shape.
inline SortOutcome<double> run_algorithm(Algorithm a, std::span<const double> values,
                                         const SortOptions<double>& opts = {}) {
  switch (a) {
    case Algorithm::trivial: return trivial_graph_sort(values, opts);
    case Algorithm::graph: return graph_sort(values, opts);
    case Algorithm::graph_merge: return graph_merge_sort(values, opts);
    case Algorithm::reference: {
      SortOutcome<double> out;
      out.permutation = index_order(values.size());
      std::uint64_t comparisons = 0;
      std::stable_sort(out.permutation.begin(), out.permutation.end(), [&](Vertex a, Vertex b) {
        ++comparisons;
        return values[a - 1] < values[b - 1];
      });
      out.output = to_array(values, std::span<const Vertex>(out.permutation));
      out.metrics.key_comparisons = comparisons;
      return out;
    }
  }
  throw config_error("unknown algorithm");
}

struct BenchRow {
  Algorithm algorithm{};
  std::size_t n = 0;
  Distribution distribution{};
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t arcs_added = 0;
  std::uint64_t dfs_traversals = 0;
  std::uint64_t merge_rounds = 0;
  std::size_t first_forest_components = 0;
  std::int64_t wall_time_ns = 0;
  bool sorted_ok = false;
};

inline constexpr std::string_view kCsvHeader =
    "algorithm,n,distribution,seed,comparisons,arcs_added,dfs_traversals,merge_rounds,"
    "first_forest_components,wall_time_ns";

inline std::string to_csv(const BenchRow& r) {
  std::ostringstream os;
  os << to_string(r.algorithm) << ',' << r.n << ',' << to_string(r.distribution) << ','
     << r.seed << ',' << r.comparisons << ',' << r.arcs_added << ',' << r.dfs_traversals << ','
     << r.merge_rounds << ',' << r.first_forest_components << ',' << r.wall_time_ns;
  return os.str();
}

inline BenchRow run_trial(const BenchConfig& cfg, Algorithm a, std::span<const double> input,
                          std::size_t trial) {
  SortOptions<double> opts;
  opts.visit_order = cfg.visit_order;
  opts.shuffle_seed = cfg.shuffle_seed;
  const auto t0 = std::chrono::steady_clock::now();
  const auto outcome = run_algorithm(a, input, opts);
  const auto t1 = std::chrono::steady_clock::now();

  BenchRow row;
  row.algorithm = a;
  row.n = input.size();
  row.distribution = cfg.distribution;
  row.seed = cfg.seed;
  row.trial = trial;
  row.comparisons = outcome.metrics.key_comparisons;
  row.arcs_added = outcome.metrics.arcs_added;
  row.dfs_traversals = outcome.metrics.dfs_traversals;
  row.merge_rounds = outcome.metrics.merge_rounds;
  row.first_forest_components = outcome.first_components;
  row.wall_time_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  row.sorted_ok = std::is_sorted(outcome.output.begin(), outcome.output.end());
  return row;
}

/// All rows in (algorithm, n, trial) order.
inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  validate(cfg);
  std::vector<BenchRow> rows;
  const std::vector<std::size_t> sizes =
      cfg.distribution == Distribution::file ? std::vector<std::size_t>{cfg.fixed_input.size()}
                                             : cfg.sizes;
  for (auto a : cfg.algorithms) {
    for (auto n : sizes) {
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        const auto input = cfg.distribution == Distribution::file
                               ? cfg.fixed_input
                               : generate(cfg.distribution, n, cfg.seed, t);
        rows.push_back(run_trial(cfg, a, input, t));
      }
    }
  }
  return rows;
}

}  // namespace graphsort::cli

#endif  // GRAPHSORT_CLI_BENCH_HPP
