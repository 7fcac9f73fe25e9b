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

#ifndef GRAPHSORT_SORT_KEY_HPP
#define GRAPHSORT_SORT_KEY_HPP

#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

namespace graphsort {

// Vertices are 1-based: vertex v stands for array position v. Zero is never a
// valid vertex.
using Vertex = std::size_t;

template <typename T>
concept SortableValue = std::totally_ordered<T> && std::copyable<T>;

// (value, original position). Equal values are ordered by position, which is
// what makes every sorter in this library stable.
template <SortableValue T>
struct SortKey {
  T value;
  Vertex index;

  friend constexpr bool operator<(const SortKey& a, const SortKey& b) {
    if (a.value < b.value) return true;
    if (b.value < a.value) return false;
    return a.index < b.index;
  }
  friend constexpr bool operator>(const SortKey& a, const SortKey& b) { return b < a; }
  friend constexpr bool operator==(const SortKey& a, const SortKey& b) {
    return a.index == b.index && !(a.value < b.value) && !(b.value < a.value);
  }
};

template <SortableValue T>
std::vector<SortKey<T>> make_keys(std::span<const T> values) {
  std::vector<SortKey<T>> keys;
  keys.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) keys.push_back({values[i], i + 1});
  return keys;
}

}  // namespace graphsort

#endif  // GRAPHSORT_SORT_KEY_HPP
