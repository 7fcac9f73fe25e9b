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

#ifndef GRAPHSORT_GRAPHSORT_HPP
#define GRAPHSORT_GRAPHSORT_HPP

#include "graphsort/comparison_graph.hpp"
#include "graphsort/construct.hpp"
#include "graphsort/dfs.hpp"
#include "graphsort/error.hpp"
#include "graphsort/merge.hpp"
#include "graphsort/metrics.hpp"
#include "graphsort/oracle.hpp"
#include "graphsort/sort.hpp"
#include "graphsort/sort_key.hpp"

#endif  // GRAPHSORT_GRAPHSORT_HPP
