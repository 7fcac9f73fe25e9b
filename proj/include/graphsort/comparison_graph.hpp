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

#ifndef GRAPHSORT_COMPARISON_GRAPH_HPP
#define GRAPHSORT_COMPARISON_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphsort/error.hpp"
#include "graphsort/metrics.hpp"
#include "graphsort/sort_key.hpp"

namespace graphsort {

/// Directed graph over vertices 1..n in which every arc (u, v) satisfies
/// key(u) < key(v). Out-neighbour lists are kept strictly ascending by key,
/// so the head of a list is always the smallest vertex reachable in one step.
///
/// The same object plays the role of its own DFS forest: a depth-first
/// search replaces the adjacency lists with the traversed tree arcs.
///
/// A graph is mutated by one thread at a time; const access may be shared.
template <SortableValue T>
class ComparisonGraph {
 public:
  using key_type = SortKey<T>;

  ComparisonGraph() = default;

  /// Null graph of order keys.size(). Key indices must be exactly 1..n in
  /// position order.
  explicit ComparisonGraph(std::vector<key_type> keys)
      : keys_(std::move(keys)), adj_(keys_.size()) {
    for (std::size_t i = 0; i < keys_.size(); ++i) {
      if (keys_[i].index != i + 1) {
        throw structural_error("key table entry " + std::to_string(i + 1) +
                               " carries index " + std::to_string(keys_[i].index));
      }
    }
  }

  /// Null graph of order n; keys must hold exactly n entries.
  static ComparisonGraph null_graph(std::size_t n, std::vector<key_type> keys) {
    if (keys.size() != n) {
      throw structural_error("key table has " + std::to_string(keys.size()) +
                             " entries for a graph of order " + std::to_string(n));
    }
    return ComparisonGraph(std::move(keys));
  }

  static ComparisonGraph from_values(std::span<const T> values) {
    return ComparisonGraph(make_keys(values));
  }

  std::size_t order() const noexcept { return keys_.size(); }
  std::size_t size() const noexcept { return arcs_; }

  const key_type& key(Vertex v) const {
    check_vertex(v);
    return keys_[v - 1];
  }
  std::span<const key_type> keys() const noexcept { return keys_; }

  std::span<const Vertex> out_neighbors(Vertex u) const {
    check_vertex(u);
    return adj_[u - 1];
  }

  std::optional<Vertex> min_out_neighbor(Vertex u) const {
    check_vertex(u);
    const auto& list = adj_[u - 1];
    if (list.empty()) return std::nullopt;
    return list.front();
  }

  bool has_arc(Vertex u, Vertex v) const {
    for (Vertex w : out_neighbors(u)) {
      if (w == v) return true;
    }
    return false;
  }

  /// key(u) < key(v), not counted in metrics.
  bool less(Vertex u, Vertex v) const { return key(u) < key(v); }

  /// key(u) < key(v), counted as one key comparison.
  bool compare(Vertex u, Vertex v) {
    ++metrics_.key_comparisons;
    return less(u, v);
  }

  /// Inserts the pre-oriented arc (u, v) keeping adj[u] ascending. Returns
  /// false and leaves the graph unchanged when the arc is already present.
  bool add_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !less(u, v)) {
      throw orientation_error("arc (" + std::to_string(u) + ", " + std::to_string(v) +
                              ") does not point to a larger key");
    }
    auto& list = adj_[u - 1];
    const key_type& kv = keys_[v - 1];
    auto pos = list.begin();
    for (; pos != list.end(); ++pos) {
      ++metrics_.list_scan_steps;
      if (*pos == v) return false;
      if (kv < keys_[*pos - 1]) break;
    }
    list.insert(pos, v);
    ++arcs_;
    ++metrics_.arcs_added;
    return true;
  }

  /// Drops every arc (u, v) with parent[v] != u. parent is indexed by vertex
  /// (parent[v - 1]), zero meaning no parent. Relative order of the kept
  /// arcs is unchanged, so lists stay sorted.
  void reduce_to_forest(std::span<const Vertex> parent) {
    if (parent.size() != order()) {
      throw structural_error("parent table size does not match graph order");
    }
    arcs_ = 0;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      auto& list = adj_[u];
      std::erase_if(list, [&](Vertex v) { return parent[v - 1] != u + 1; });
      arcs_ += list.size();
    }
  }

  Metrics& metrics() noexcept { return metrics_; }
  const Metrics& metrics() const noexcept { return metrics_; }

  /// Appends (u, v) with no orientation or ordering checks. Only for tests
  /// that need a corrupted graph to exercise the validators.
  void append_unchecked_for_testing(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u - 1].push_back(v);
    ++arcs_;
  }

  /// Structural equality: same keys and same adjacency lists. Metrics are
  /// not compared.
  friend bool operator==(const ComparisonGraph& a, const ComparisonGraph& b) {
    return a.keys_ == b.keys_ && a.adj_ == b.adj_ && a.arcs_ == b.arcs_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v == 0 || v > keys_.size()) {
      throw bounds_error("vertex " + std::to_string(v) + " outside 1.." +
                         std::to_string(keys_.size()));
    }
  }

  std::vector<key_type> keys_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t arcs_ = 0;
  Metrics metrics_;
};

}  // namespace graphsort

#endif  // GRAPHSORT_COMPARISON_GRAPH_HPP
