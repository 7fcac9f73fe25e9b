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

#ifndef GRAPHSORT_ORACLE_HPP
#define GRAPHSORT_ORACLE_HPP

// Brute-force validators. They only read the graph's keys and raw adjacency
// lists; none of them reuse the DFS or merge code they are meant to check.

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "graphsort/comparison_graph.hpp"
#include "graphsort/error.hpp"

namespace graphsort::oracle {

inline constexpr std::size_t kMaxTopoSortOrder = 12;
inline constexpr std::size_t kMaxHamiltonianOrder = 10;

/// Kahn's algorithm; true iff every vertex can be peeled off.
template <SortableValue T>
bool is_acyclic(const ComparisonGraph<T>& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> indeg(n, 0);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v : g.out_neighbors(u)) ++indeg[v - 1];
  }
  std::vector<Vertex> ready;
  for (Vertex v = 1; v <= n; ++v) {
    if (indeg[v - 1] == 0) ready.push_back(v);
  }
  std::size_t peeled = 0;
  while (!ready.empty()) {
    const Vertex u = ready.back();
    ready.pop_back();
    ++peeled;
    for (Vertex v : g.out_neighbors(u)) {
      if (--indeg[v - 1] == 0) ready.push_back(v);
    }
  }
  return peeled == n;
}

/// Every arc points to a larger key and each list is strictly ascending
/// (hence duplicate-free).
template <SortableValue T>
bool is_valid_comparison_graph(const ComparisonGraph<T>& g) {
  std::size_t arcs = 0;
  for (Vertex u = 1; u <= g.order(); ++u) {
    const auto adj = g.out_neighbors(u);
    arcs += adj.size();
    for (std::size_t i = 0; i < adj.size(); ++i) {
      if (adj[i] == 0 || adj[i] > g.order()) return false;
      if (!(g.key(u) < g.key(adj[i]))) return false;
      if (i > 0 && !(g.key(adj[i - 1]) < g.key(adj[i]))) return false;
    }
  }
  return arcs == g.size();
}

struct TopoSortSet {
  std::vector<std::vector<Vertex>> sorts;
  // max(1, number of positions whose vertex differs between sorts).
  std::size_t trueness = 0;
  // Enumeration stopped at the cap; trueness covers only the listed sorts.
  bool truncated = false;
};

namespace detail {

template <SortableValue T>
void enumerate(const ComparisonGraph<T>& g, std::vector<std::size_t>& indeg,
               std::vector<bool>& used, std::vector<Vertex>& prefix, std::size_t cap,
               TopoSortSet& out) {
  const std::size_t n = g.order();
  if (out.truncated) return;
  if (prefix.size() == n) {
    if (out.sorts.size() >= cap) {
      out.truncated = true;
      return;
    }
    out.sorts.push_back(prefix);
    return;
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (used[v - 1] || indeg[v - 1] != 0) continue;
    used[v - 1] = true;
    prefix.push_back(v);
    for (Vertex w : g.out_neighbors(v)) --indeg[w - 1];
    enumerate(g, indeg, used, prefix, cap, out);
    for (Vertex w : g.out_neighbors(v)) ++indeg[w - 1];
    prefix.pop_back();
    used[v - 1] = false;
    if (out.truncated) return;
  }
}

}  // namespace detail

/// All topological sorts of g (at most cap of them) and the trueness of the
/// listed set. A position counts as fixed when every sort puts the same
/// vertex there.
template <SortableValue T>
TopoSortSet enumerate_topological_sorts(const ComparisonGraph<T>& g, std::size_t cap = 1'000'000) {
  const std::size_t n = g.order();
  if (n > kMaxTopoSortOrder) {
    throw guard_error("topological sort enumeration refused for order " + std::to_string(n));
  }
  TopoSortSet out;
  std::vector<std::size_t> indeg(n, 0);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v : g.out_neighbors(u)) ++indeg[v - 1];
  }
  std::vector<bool> used(n, false);
  std::vector<Vertex> prefix;
  detail::enumerate(g, indeg, used, prefix, cap, out);

  std::size_t non_fixed = 0;
  if (!out.sorts.empty()) {
    for (std::size_t t = 0; t < n; ++t) {
      const Vertex first = out.sorts.front()[t];
      const bool fixed = std::all_of(out.sorts.begin(), out.sorts.end(),
                                     [&](const auto& s) { return s[t] == first; });
      if (!fixed) ++non_fixed;
    }
  }
  out.trueness = std::max<std::size_t>(1, non_fixed);
  return out;
}

/// True iff no arc of g goes from a later to an earlier position of order.
template <SortableValue T>
bool is_topological_sort(const ComparisonGraph<T>& g, std::span<const Vertex> order) {
  const std::size_t n = g.order();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t t = 0; t < n; ++t) {
    if (order[t] == 0 || order[t] > n || pos[order[t] - 1] != n) return false;
    pos[order[t] - 1] = t;
  }
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v : g.out_neighbors(u)) {
      if (pos[v - 1] < pos[u - 1]) return false;
    }
  }
  return true;
}

namespace detail {

template <SortableValue T>
std::size_t count_paths_from(const ComparisonGraph<T>& g, Vertex u, std::vector<bool>& on_path,
                             std::size_t length) {
  if (length == g.order()) return 1;
  std::size_t total = 0;
  for (Vertex v : g.out_neighbors(u)) {
    if (on_path[v - 1]) continue;
    on_path[v - 1] = true;
    total += count_paths_from(g, v, on_path, length + 1);
    on_path[v - 1] = false;
  }
  return total;
}

}  // namespace detail

/// Exact number of directed Hamiltonian paths, by exhaustive search.
template <SortableValue T>
std::size_t count_hamiltonian_paths(const ComparisonGraph<T>& g) {
  const std::size_t n = g.order();
  if (n > kMaxHamiltonianOrder) {
    throw guard_error("Hamiltonian path search refused for order " + std::to_string(n));
  }
  if (n == 0) return 0;
  std::size_t total = 0;
  std::vector<bool> on_path(n, false);
  for (Vertex s = 1; s <= n; ++s) {
    on_path[s - 1] = true;
    total += detail::count_paths_from(g, s, on_path, 1);
    on_path[s - 1] = false;
  }
  return total;
}

/// Component label (0-based, dense) of every vertex in the underlying
/// undirected graph.
template <SortableValue T>
std::vector<std::size_t> component_labels(const ComparisonGraph<T>& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v : g.out_neighbors(u)) {
      const auto a = find(u - 1);
      const auto b = find(v - 1);
      if (a != b) parent[a] = b;
    }
  }
  std::vector<std::size_t> label(n);
  std::vector<std::size_t> dense(n, n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto r = find(v);
    if (dense[r] == n) dense[r] = next++;
    label[v] = dense[r];
  }
  return label;
}

template <SortableValue T>
std::size_t count_components(const ComparisonGraph<T>& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

/// For each root, walking adjacency heads from it must visit its entire
/// undirected component, each vertex once, in strictly ascending key order.
template <SortableValue T>
bool component_hamiltonian_check(const ComparisonGraph<T>& g, std::span<const Vertex> roots) {
  const auto labels = component_labels(g);
  std::vector<std::size_t> comp_size(g.order(), 0);
  for (auto l : labels) ++comp_size[l];
  for (Vertex r : roots) {
    if (r == 0 || r > g.order()) return false;
    std::size_t walked = 1;
    Vertex v = r;
    while (auto head = g.min_out_neighbor(v)) {
      const Vertex next = *head;
      if (!(g.key(v) < g.key(next)) || labels[next - 1] != labels[r - 1]) return false;
      v = next;
      if (++walked > comp_size[labels[r - 1]]) return false;
    }
    if (walked != comp_size[labels[r - 1]]) return false;
  }
  return true;
}

/// Vertices sorted by SortKey: the unique topological sort of any graph that
/// has a Hamiltonian path.
template <SortableValue T>
std::vector<Vertex> key_sorted_vertices(const ComparisonGraph<T>& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{1});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.key(a) < g.key(b); });
  return order;
}

/// Shape of a DFS forest of a reach-1 graph: no vertex has two parents,
/// roots have at most two children and every other vertex at most one.
template <SortableValue T>
bool reach_one_forest_shape(const ComparisonGraph<T>& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> indeg(n, 0);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v : g.out_neighbors(u)) ++indeg[v - 1];
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (indeg[v - 1] > 1) return false;
    const std::size_t out = g.out_neighbors(v).size();
    if (indeg[v - 1] == 0 ? out > 2 : out > 1) return false;
  }
  return true;
}

}  // namespace graphsort::oracle

#endif  // GRAPHSORT_ORACLE_HPP
