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

#ifndef GRAPHSORT_MERGE_HPP
#define GRAPHSORT_MERGE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "graphsort/comparison_graph.hpp"
#include "graphsort/dfs.hpp"
#include "graphsort/error.hpp"

namespace graphsort {

/// Zipper-merges the two key-ascending chains headed by x and y. A chain is
/// followed through adjacency heads, so it may be a tree path or the
/// Hamiltonian path of a merged component.
///
/// Each step compares the two cursors, adds an arc from the smaller to the
/// larger and advances the smaller one; the walk stops as soon as either
/// chain runs out. Afterwards both chains lie on one ascending chain headed
/// by the smaller of x and y. Returns the number of arcs added (one key
/// comparison each).
template <SortableValue T>
std::size_t merge_paths(ComparisonGraph<T>& h, Vertex x, Vertex y) {
  if (x == y) throw precondition_error("merge_paths: both chains start at vertex " + std::to_string(x));
  std::optional<Vertex> u = x;
  std::optional<Vertex> v = y;
  std::size_t added = 0;
  while (u && v) {
    if (*u == *v) {
      throw precondition_error("merge_paths: chains share vertex " + std::to_string(*u));
    }
    // The successor is read before the insertion: the new arc may become the
    // adjacency head and must not be taken as the next chain vertex.
    if (h.compare(*u, *v)) {
      const auto next = h.min_out_neighbor(*u);
      if (h.add_arc(*u, *v)) ++added;
      u = next;
    } else {
      const auto next = h.min_out_neighbor(*v);
      if (h.add_arc(*v, *u)) ++added;
      v = next;
    }
  }
  return added;
}

/// For every root with two children in a first-round DFS forest, merges the
/// two child paths so the whole tree carries a Hamiltonian path from its
/// root. Roots are unchanged. Returns the number of arcs added.
template <SortableValue T>
std::size_t merge_sub_trees(ComparisonGraph<T>& h, std::span<const Vertex> roots) {
  std::size_t added = 0;
  for (Vertex r : roots) {
    const auto children = h.out_neighbors(r);
    if (children.size() > 2) {
      throw structural_error("root " + std::to_string(r) + " has " +
                             std::to_string(children.size()) +
                             " children; expected a forest of a reach-1 graph");
    }
    if (children.size() == 2) {
      const Vertex first = children.front();
      const Vertex second = children.back();
      added += merge_paths(h, first, second);
    }
  }
  return added;
}

/// Merges the components headed by roots[0] and roots[1], roots[2] and
/// roots[3], ... and returns the surviving heads (the smaller key of each
/// pair, plus an unpaired last root). Every component must already carry a
/// Hamiltonian path from its head. The result has ceil(k/2) entries.
template <SortableValue T>
RootList merge_trees(ComparisonGraph<T>& h, std::span<const Vertex> roots,
                     std::size_t* arcs_added = nullptr) {
  if (roots.empty()) throw parameter_error("merge_trees: empty root list");
  RootList survivors;
  survivors.reserve((roots.size() + 1) / 2);
  std::size_t added = 0;
  std::size_t j = 0;
  for (; j + 1 < roots.size(); j += 2) {
    const Vertex p = roots[j];
    const Vertex q = roots[j + 1];
    survivors.push_back(h.less(p, q) ? p : q);
    added += merge_paths(h, p, q);
  }
  if (j < roots.size()) survivors.push_back(roots[j]);
  if (arcs_added) *arcs_added = added;
  return survivors;
}

}  // namespace graphsort

#endif  // GRAPHSORT_MERGE_HPP
