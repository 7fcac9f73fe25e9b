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

#ifndef GRAPHSORT_DFS_HPP
#define GRAPHSORT_DFS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "graphsort/comparison_graph.hpp"
#include "graphsort/error.hpp"

namespace graphsort {

using RootList = std::vector<Vertex>;

/// Bookkeeping of one depth-first search. Per-vertex tables are indexed by
/// v - 1; a parent of 0 marks a root.
struct DfsRun {
  std::vector<Vertex> parent;
  std::vector<std::size_t> start;
  std::vector<std::size_t> finish;
  // Vertices by decreasing finish time: a topological sort of the searched
  // graph.
  std::vector<Vertex> stack;
  std::vector<Vertex> visit_list;
  // Parentless vertices in the order they were discovered.
  RootList roots;
  std::size_t tree_arcs = 0;

  explicit DfsRun(std::size_t n = 0) : parent(n, 0), start(n, 0), finish(n, 0) {}

  Vertex parent_of(Vertex v) const { return parent.at(v - 1); }

  friend bool operator==(const DfsRun&, const DfsRun&) = default;
};

namespace detail {

inline void check_visit_list(std::span<const Vertex> visit_list, std::size_t n) {
  for (Vertex v : visit_list) {
    if (v == 0 || v > n) {
      throw bounds_error("visit list names vertex " + std::to_string(v) +
                         " outside 1.." + std::to_string(n));
    }
  }
}

inline void finalize_stack(DfsRun& run, std::vector<Vertex>& finish_order,
                           std::size_t n, const char* who) {
  if (finish_order.size() != n) {
    throw incomplete_search_error(std::string(who) + ": " +
                                  std::to_string(n - finish_order.size()) +
                                  " vertices unreachable from the visit list");
  }
  run.stack.assign(finish_order.rbegin(), finish_order.rend());
}

template <SortableValue T>
void recursive_visit(const ComparisonGraph<T>& g, Vertex u, DfsRun& run,
                     std::vector<Vertex>& finish_order, std::size_t& clock,
                     std::uint64_t& checks) {
  run.start[u - 1] = ++clock;
  for (Vertex w : g.out_neighbors(u)) {
    ++checks;
    if (run.start[w - 1] == 0) {
      run.parent[w - 1] = u;
      ++run.tree_arcs;
      recursive_visit(g, w, run, finish_order, clock, checks);
    }
  }
  run.finish[u - 1] = ++clock;
  finish_order.push_back(u);
}

}  // namespace detail

/// General depth-first search seeded by visit_list, exploring children in
/// adjacency (ascending key) order. Replaces g with its DFS forest and
/// returns the run. Uses an explicit frame stack, so depth is bounded only by
/// memory.
///
/// Throws incomplete_search_error, leaving g untouched, if some vertex is not
/// reachable from the visit list.
template <SortableValue T>
DfsRun dfs_replace(ComparisonGraph<T>& g, std::span<const Vertex> visit_list) {
  const std::size_t n = g.order();
  detail::check_visit_list(visit_list, n);
  DfsRun run(n);
  run.visit_list.assign(visit_list.begin(), visit_list.end());

  struct Frame {
    Vertex v;
    std::size_t next;
  };
  std::vector<Frame> frames;
  std::vector<Vertex> finish_order;
  finish_order.reserve(n);
  std::size_t clock = 0;
  std::uint64_t checks = 0;

  for (Vertex root : visit_list) {
    if (run.start[root - 1] != 0) continue;
    run.roots.push_back(root);
    run.start[root - 1] = ++clock;
    frames.push_back({root, 0});
    while (!frames.empty()) {
      Frame& top = frames.back();
      const auto adj = g.out_neighbors(top.v);
      if (top.next < adj.size()) {
        const Vertex w = adj[top.next++];
        ++checks;
        if (run.start[w - 1] == 0) {
          run.parent[w - 1] = top.v;
          ++run.tree_arcs;
          run.start[w - 1] = ++clock;
          frames.push_back({w, 0});
        }
      } else {
        run.finish[top.v - 1] = ++clock;
        finish_order.push_back(top.v);
        frames.pop_back();
      }
    }
  }

  detail::finalize_stack(run, finish_order, n, "dfs_replace");
  g.reduce_to_forest(run.parent);
  g.metrics().dfs_traversals += run.tree_arcs;
  g.metrics().dfs_arc_checks += checks;
  return run;
}

/// Textbook recursive DFS with the same contract as dfs_replace. Kept as a
/// reference for equivalence tests; recursion depth equals the longest tree
/// path, so only use it on small graphs.
template <SortableValue T>
DfsRun dfs_replace_recursive(ComparisonGraph<T>& g, std::span<const Vertex> visit_list) {
  const std::size_t n = g.order();
  detail::check_visit_list(visit_list, n);
  DfsRun run(n);
  run.visit_list.assign(visit_list.begin(), visit_list.end());
  std::vector<Vertex> finish_order;
  std::size_t clock = 0;
  std::uint64_t checks = 0;
  for (Vertex root : visit_list) {
    if (run.start[root - 1] != 0) continue;
    run.roots.push_back(root);
    detail::recursive_visit(g, root, run, finish_order, clock, checks);
  }
  detail::finalize_stack(run, finish_order, n, "dfs_replace_recursive");
  g.reduce_to_forest(run.parent);
  g.metrics().dfs_traversals += run.tree_arcs;
  g.metrics().dfs_arc_checks += checks;
  return run;
}

/// DFS specialised to graphs whose every component carries a Hamiltonian
/// path headed by an entry of roots. Each root's component is discovered by
/// following adjacency heads until a sink, with no backtracking: in such a
/// graph everything else a backtrack could find is already visited. The
/// result (forest, stack, timestamps) matches dfs_replace(g, roots).
///
/// Throws precondition_error when a walk runs into an already visited vertex
/// or when vertices remain unvisited after all walks.
template <SortableValue T>
DfsRun dfs_iterative(ComparisonGraph<T>& g, std::span<const Vertex> roots) {
  const std::size_t n = g.order();
  detail::check_visit_list(roots, n);
  DfsRun run(n);
  run.visit_list.assign(roots.begin(), roots.end());
  std::vector<Vertex> finish_order;
  finish_order.reserve(n);
  std::vector<Vertex> chain;
  std::size_t clock = 0;
  std::uint64_t checks = 0;

  for (Vertex root : roots) {
    if (run.start[root - 1] != 0) continue;
    run.roots.push_back(root);
    chain.clear();
    Vertex v = root;
    run.start[v - 1] = ++clock;
    chain.push_back(v);
    while (auto next = g.min_out_neighbor(v)) {
      ++checks;
      if (run.start[*next - 1] != 0) {
        throw precondition_error("chain walk from root " + std::to_string(root) +
                                 " reached visited vertex " + std::to_string(*next));
      }
      run.parent[*next - 1] = v;
      ++run.tree_arcs;
      v = *next;
      run.start[v - 1] = ++clock;
      chain.push_back(v);
    }
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      run.finish[*it - 1] = ++clock;
      finish_order.push_back(*it);
    }
  }

  if (finish_order.size() != n) {
    throw precondition_error("dfs_iterative: " + std::to_string(n - finish_order.size()) +
                             " vertices not on any root's chain");
  }
  run.stack.assign(finish_order.rbegin(), finish_order.rend());
  g.reduce_to_forest(run.parent);
  g.metrics().dfs_traversals += run.tree_arcs;
  g.metrics().dfs_arc_checks += checks;
  return run;
}

/// Parentless vertices of the forest left by run, in discovery order.
inline RootList find_roots(const DfsRun& run) { return run.roots; }

}  // namespace graphsort

#endif  // GRAPHSORT_DFS_HPP
