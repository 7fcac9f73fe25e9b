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

#ifndef GRAPHSORT_METRICS_HPP
#define GRAPHSORT_METRICS_HPP

#include <cstdint>

namespace graphsort {

// Operation counters. key_comparisons is the cost-model unit: one per
// SortKey comparison made to orient an arc, advance a merge cursor or pick a
// minimum. Adjacency insertion scans are tracked apart in list_scan_steps.
struct Metrics {
  std::uint64_t key_comparisons = 0;
  std::uint64_t list_scan_steps = 0;
  std::uint64_t arcs_added = 0;
  // Tree arcs traversed by DFS (arcs that discover a new vertex).
  std::uint64_t dfs_traversals = 0;
  // Every adjacency entry DFS looked at, tree or not.
  std::uint64_t dfs_arc_checks = 0;
  std::uint64_t merge_rounds = 0;

  Metrics& operator+=(const Metrics& o) {
    key_comparisons += o.key_comparisons;
    list_scan_steps += o.list_scan_steps;
    arcs_added += o.arcs_added;
    dfs_traversals += o.dfs_traversals;
    dfs_arc_checks += o.dfs_arc_checks;
    merge_rounds += o.merge_rounds;
    return *this;
  }

  friend Metrics operator-(Metrics a, const Metrics& b) {
    a.key_comparisons -= b.key_comparisons;
    a.list_scan_steps -= b.list_scan_steps;
    a.arcs_added -= b.arcs_added;
    a.dfs_traversals -= b.dfs_traversals;
    a.dfs_arc_checks -= b.dfs_arc_checks;
    a.merge_rounds -= b.merge_rounds;
    return a;
  }

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

}  // namespace graphsort

#endif  // GRAPHSORT_METRICS_HPP
