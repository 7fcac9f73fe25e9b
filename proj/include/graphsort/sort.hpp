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

#ifndef GRAPHSORT_SORT_HPP
#define GRAPHSORT_SORT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "graphsort/comparison_graph.hpp"
#include "graphsort/construct.hpp"
#include "graphsort/dfs.hpp"
#include "graphsort/error.hpp"
#include "graphsort/merge.hpp"
#include "graphsort/metrics.hpp"

namespace graphsort {

/// Index (1-based) of the smallest SortKey; the first occurrence on value
/// ties. Counts n - 1 key comparisons into metrics when given.
template <SortableValue T>
Vertex find_min(std::span<const T> values, Metrics* metrics = nullptr) {
  if (values.empty()) throw parameter_error("find_min: empty array");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (metrics) ++metrics->key_comparisons;
    // Strict < keeps the earlier index on ties, matching SortKey order.
    if (values[i] < values[best]) best = i;
  }
  return best + 1;
}

/// output[t] = values[order[t]]; order must be a permutation of 1..n.
template <SortableValue T>
std::vector<T> to_array(std::span<const T> values, std::span<const Vertex> order) {
  if (order.size() != values.size()) {
    throw structural_error("to_array: sequence length " + std::to_string(order.size()) +
                           " for " + std::to_string(values.size()) + " values");
  }
  std::vector<bool> seen(values.size(), false);
  std::vector<T> out;
  out.reserve(values.size());
  for (Vertex v : order) {
    if (v == 0 || v > values.size() || seen[v - 1]) {
      throw structural_error("to_array: sequence is not a permutation (vertex " +
                             std::to_string(v) + ")");
    }
    seen[v - 1] = true;
    out.push_back(values[v - 1]);
  }
  return out;
}

// First-round visit order for graph_sort. min_first starts at the minimum and
// then continues 1..n; index is plain 1..n; shuffled is a seeded permutation.
enum class VisitOrder { min_first, index, shuffled };

inline std::vector<Vertex> index_order(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{1});
  return order;
}

inline std::vector<Vertex> min_first_order(std::size_t n, Vertex min_vertex) {
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(min_vertex);
  for (Vertex v = 1; v <= n; ++v) {
    if (v != min_vertex) order.push_back(v);
  }
  return order;
}

inline std::vector<Vertex> shuffled_order(std::size_t n, std::uint64_t seed) {
  auto order = index_order(n);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

enum class StageKind { construct, forest, merged };

/// A snapshot handed to SortOptions::on_stage at each figure boundary:
/// after construction, after each DFS and after each merge round.
template <SortableValue T>
struct Stage {
  StageKind kind;
  std::string name;
  const ComparisonGraph<T>& graph;
  const RootList& roots;
};

template <SortableValue T>
struct SortOptions {
  VisitOrder visit_order = VisitOrder::min_first;
  std::uint64_t shuffle_seed = 0;
  std::function<void(const Stage<T>&)> on_stage;
};

struct RoundSnapshot {
  std::size_t round = 0;
  std::size_t components_before = 0;
  std::size_t components_after = 0;
  // Includes the one-off sub-tree merge when it happens in round 1.
  std::size_t arcs_added = 0;
  std::size_t subtree_arcs = 0;
  std::uint64_t comparisons = 0;
  std::uint64_t dfs_traversals = 0;
};

template <SortableValue T>
struct SortOutcome {
  std::vector<T> output;
  // Final topological sort: output[t] = input[permutation[t] - 1].
  std::vector<Vertex> permutation;
  Metrics metrics;
  std::vector<RoundSnapshot> rounds;
  std::size_t construction_arcs = 0;
  std::size_t first_components = 0;
  RootList first_roots;
  std::uint64_t final_dfs_traversals = 0;
};

namespace detail {

template <SortableValue T>
void emit(const SortOptions<T>& opts, StageKind kind, std::string name,
          const ComparisonGraph<T>& g, const RootList& roots) {
  if (opts.on_stage) opts.on_stage(Stage<T>{kind, std::move(name), g, roots});
}

template <SortableValue T>
SortOutcome<T> single_element(std::span<const T> values, const ComparisonGraph<T>& g,
                              const SortOptions<T>& opts) {
  SortOutcome<T> out;
  RootList roots{1};
  emit(opts, StageKind::construct, "construct", g, roots);
  out.output.assign(values.begin(), values.end());
  out.permutation = {1};
  out.first_components = 1;
  out.first_roots = roots;
  out.metrics = g.metrics();
  return out;
}

// The shared merge loop: merge_trees then an iterative DFS on the new heads
// until one head remains. `mark` is the metrics baseline for round 1, so that
// work done just before the loop (the sub-tree merge) is charged to it.
template <SortableValue T>
DfsRun merge_rounds(ComparisonGraph<T>& g, RootList roots, Metrics mark,
                    std::size_t subtree_arcs, SortOutcome<T>& out,
                    const SortOptions<T>& opts) {
  DfsRun run;
  std::size_t round = 0;
  while (roots.size() > 1) {
    ++round;
    RoundSnapshot snap;
    snap.round = round;
    snap.components_before = roots.size();
    snap.subtree_arcs = round == 1 ? subtree_arcs : 0;
    roots = merge_trees(g, roots);
    emit(opts, StageKind::merged, "merged" + std::to_string(round), g, roots);
    run = dfs_iterative(g, roots);
    emit(opts, StageKind::forest, "forest" + std::to_string(round), g, roots);
    ++g.metrics().merge_rounds;
    const Metrics delta = g.metrics() - mark;
    snap.components_after = roots.size();
    snap.arcs_added = delta.arcs_added;
    snap.comparisons = delta.key_comparisons;
    snap.dfs_traversals = delta.dfs_traversals;
    out.rounds.push_back(snap);
    mark = g.metrics();
  }
  out.final_dfs_traversals = run.tree_arcs;
  return run;
}

template <SortableValue T>
void finish(std::span<const T> values, const ComparisonGraph<T>& g, const DfsRun& run,
            SortOutcome<T>& out) {
  out.permutation = run.stack;
  out.output = to_array(values, std::span<const Vertex>(out.permutation));
  out.metrics = g.metrics();
}

}  // namespace detail

/// Complete-graph sorter: builds all n(n-1)/2 comparisons, then one DFS from
/// the minimum walks the Hamiltonian path. Cubic construction cost; meant
/// for small inputs and as a baseline.
template <SortableValue T>
SortOutcome<T> trivial_graph_sort(std::span<const T> values, const SortOptions<T>& opts = {}) {
  if (values.empty()) return {};
  auto g = construct_complete(values);
  if (values.size() == 1) return detail::single_element(values, g, opts);

  SortOutcome<T> out;
  out.construction_arcs = g.size();
  detail::emit(opts, StageKind::construct, "construct", g, out.first_roots);
  const Vertex x = find_min(values, &g.metrics());
  const std::vector<Vertex> visit{x};
  DfsRun run = dfs_replace(g, std::span<const Vertex>(visit));
  out.first_roots = find_roots(run);
  out.first_components = out.first_roots.size();
  out.final_dfs_traversals = run.tree_arcs;
  detail::emit(opts, StageKind::forest, "forest0", g, out.first_roots);
  detail::finish(values, g, run, out);
  return out;
}

/// Divide-and-conquer graph sort: reach-1 construction, a first DFS that
/// splits the array into ascending tree paths, a one-off merge of each
/// tree's two sub-trees, then rounds of pairwise component merges until a
/// single Hamiltonian path remains. Stable; O(n log n) comparisons.
template <SortableValue T>
SortOutcome<T> graph_sort(std::span<const T> values, const SortOptions<T>& opts = {}) {
  if (values.empty()) return {};
  const std::size_t n = values.size();
  auto g = construct_graph(values, 1);
  if (n == 1) return detail::single_element(values, g, opts);

  SortOutcome<T> out;
  out.construction_arcs = g.size();
  detail::emit(opts, StageKind::construct, "construct", g, out.first_roots);

  std::vector<Vertex> visit;
  switch (opts.visit_order) {
    case VisitOrder::min_first:
      visit = min_first_order(n, find_min(values, &g.metrics()));
      break;
    case VisitOrder::index:
      visit = index_order(n);
      break;
    case VisitOrder::shuffled:
      visit = shuffled_order(n, opts.shuffle_seed);
      break;
  }
  DfsRun run = dfs_replace(g, std::span<const Vertex>(visit));
  RootList roots = find_roots(run);
  out.first_roots = roots;
  out.first_components = roots.size();
  detail::emit(opts, StageKind::forest, "forest0", g, roots);

  const Metrics mark = g.metrics();
  const std::size_t subtree_arcs = merge_sub_trees(g, std::span<const Vertex>(roots));
  if (roots.size() == 1) {
    out.final_dfs_traversals = run.tree_arcs;
    if (subtree_arcs > 0) {
      // One tree whose root had two sub-trees: the first stack interleaves the
      // two branches, so walk the merged path once more.
      detail::emit(opts, StageKind::merged, "subtrees", g, roots);
      run = dfs_iterative(g, std::span<const Vertex>(roots));
      out.final_dfs_traversals = run.tree_arcs;
      detail::emit(opts, StageKind::forest, "forest-final", g, roots);
    }
  } else {
    run = detail::merge_rounds(g, roots, mark, subtree_arcs, out, opts);
  }
  detail::finish(values, g, run, out);
  return out;
}

/// Graph analogue of bottom-up merge sort: the seed graph pairs positions
/// (1,2), (3,4), ... so the first component count is always ceil(n/2); the
/// merge loop is the one graph_sort uses.
template <SortableValue T>
SortOutcome<T> graph_merge_sort(std::span<const T> values, const SortOptions<T>& opts = {}) {
  if (values.empty()) return {};
  const std::size_t n = values.size();
  auto g = construct_pairs(values);
  if (n == 1) return detail::single_element(values, g, opts);

  SortOutcome<T> out;
  out.construction_arcs = g.size();
  RootList roots;
  roots.reserve((n + 1) / 2);
  for (Vertex i = 1; i <= n; i += 2) {
    if (i == n) {
      roots.push_back(i);
    } else {
      roots.push_back(g.out_neighbors(i).empty() ? i + 1 : i);
    }
  }
  out.first_roots = roots;
  out.first_components = roots.size();
  detail::emit(opts, StageKind::construct, "construct", g, roots);

  DfsRun run;
  if (roots.size() == 1) {
    run = dfs_iterative(g, std::span<const Vertex>(roots));
    out.final_dfs_traversals = run.tree_arcs;
    detail::emit(opts, StageKind::forest, "forest0", g, roots);
  } else {
    run = detail::merge_rounds(g, roots, g.metrics(), 0, out, opts);
  }
  detail::finish(values, g, run, out);
  return out;
}

template <SortableValue T>
Vertex find_min(const std::vector<T>& values, Metrics* metrics = nullptr) {
  return find_min(std::span<const T>(values), metrics);
}
template <SortableValue T>
std::vector<T> to_array(const std::vector<T>& values, const std::vector<Vertex>& order) {
  return to_array(std::span<const T>(values), std::span<const Vertex>(order));
}
template <SortableValue T>
SortOutcome<T> trivial_graph_sort(const std::vector<T>& values, const SortOptions<T>& opts = {}) {
  return trivial_graph_sort(std::span<const T>(values), opts);
}
template <SortableValue T>
SortOutcome<T> graph_sort(const std::vector<T>& values, const SortOptions<T>& opts = {}) {
  return graph_sort(std::span<const T>(values), opts);
}
template <SortableValue T>
SortOutcome<T> graph_merge_sort(const std::vector<T>& values, const SortOptions<T>& opts = {}) {
  return graph_merge_sort(std::span<const T>(values), opts);
}

}  // namespace graphsort

#endif  // GRAPHSORT_SORT_HPP
