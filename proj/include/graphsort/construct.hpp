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

#ifndef GRAPHSORT_CONSTRUCT_HPP
#define GRAPHSORT_CONSTRUCT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "graphsort/comparison_graph.hpp"
#include "graphsort/error.hpp"

namespace graphsort {

// Builders for corresponding graphs. Each one orients arcs with counted key
// comparisons; the counts end up in the returned graph's metrics.

/// Largest useful reach for an array of n elements (floor(n / 2)): it already
/// covers every pair. For even n the opposite pairs are compared twice; the
/// second arc is a duplicate and is dropped.
constexpr std::size_t max_reach(std::size_t n) noexcept { return n / 2; }

/// Reach actually used for a request of r on n elements: r clamped to
/// max_reach(n). Throws for r == 0.
inline std::size_t effective_reach(std::size_t n, std::size_t r) {
  if (r == 0) throw parameter_error("reach must be at least 1");
  const std::size_t cap = max_reach(n);
  return r > cap ? cap : r;
}

/// Compares every position i with its r right-hand cyclic neighbours and adds
/// one arc per pair, oriented by SortKey. For n == 1 the null graph comes
/// back. Reach above floor(n/2) is clamped; see effective_reach.
template <SortableValue T>
ComparisonGraph<T> construct_graph(std::span<const T> values, std::size_t reach) {
  if (values.empty()) throw parameter_error("cannot construct a graph from an empty array");
  const std::size_t n = values.size();
  const std::size_t r = effective_reach(n, reach);
  auto g = ComparisonGraph<T>::from_values(values);
  for (Vertex i = 1; i <= n; ++i) {
    for (std::size_t k = 1; k <= r; ++k) {
      const Vertex j = (i + k - 1) % n + 1;
      if (g.compare(i, j)) {
        g.add_arc(i, j);
      } else {
        g.add_arc(j, i);
      }
    }
  }
  return g;
}

/// Complete corresponding graph: reach floor(n/2), n(n-1)/2 arcs.
template <SortableValue T>
ComparisonGraph<T> construct_complete(std::span<const T> values) {
  if (values.empty()) throw parameter_error("cannot construct a graph from an empty array");
  if (values.size() == 1) return ComparisonGraph<T>::from_values(values);
  return construct_graph(values, max_reach(values.size()));
}

/// One arc per consecutive pair (1,2), (3,4), ...; no wrap-around, and an odd
/// trailing element stays isolated.
template <SortableValue T>
ComparisonGraph<T> construct_pairs(std::span<const T> values) {
  if (values.empty()) throw parameter_error("cannot construct a graph from an empty array");
  auto g = ComparisonGraph<T>::from_values(values);
  for (Vertex i = 1; i + 1 <= values.size(); i += 2) {
    if (g.compare(i, i + 1)) {
      g.add_arc(i, i + 1);
    } else {
      g.add_arc(i + 1, i);
    }
  }
  return g;
}

template <SortableValue T>
ComparisonGraph<T> construct_graph(const std::vector<T>& values, std::size_t reach) {
  return construct_graph(std::span<const T>(values), reach);
}
template <SortableValue T>
ComparisonGraph<T> construct_complete(const std::vector<T>& values) {
  return construct_complete(std::span<const T>(values));
}
template <SortableValue T>
ComparisonGraph<T> construct_pairs(const std::vector<T>& values) {
  return construct_pairs(std::span<const T>(values));
}

}  // namespace graphsort

#endif  // GRAPHSORT_CONSTRUCT_HPP
