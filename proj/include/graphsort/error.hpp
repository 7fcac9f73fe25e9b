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

#ifndef GRAPHSORT_ERROR_HPP
#define GRAPHSORT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace graphsort {

// All library failures derive from graph_error. Every one of them signals a
// broken precondition or invariant; none are recoverable input conditions.
class graph_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Key tables, permutations or forest shapes that do not fit the operation.
class structural_error : public graph_error {
 public:
  using graph_error::graph_error;
};

// add_arc called with key(u) >= key(v).
class orientation_error : public graph_error {
 public:
  using graph_error::graph_error;
};

class bounds_error : public graph_error {
 public:
  using graph_error::graph_error;
};

class parameter_error : public graph_error {
 public:
  using graph_error::graph_error;
};

// Caller-side contract violated (merge chains overlap, iterative DFS run on
// a graph without per-component Hamiltonian paths, ...).
class precondition_error : public graph_error {
 public:
  using graph_error::graph_error;
};

// DFS finished while some vertex was never reached from the visit list.
class incomplete_search_error : public graph_error {
 public:
  using graph_error::graph_error;
};

// Brute-force oracle refused an instance that is too large to enumerate.
class guard_error : public graph_error {
 public:
  using graph_error::graph_error;
};

}  // namespace graphsort

#endif  // GRAPHSORT_ERROR_HPP
