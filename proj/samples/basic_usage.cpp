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

// Sorts a few arrays with each sorter and prints what the graph sorter did.

#include <iostream>
#include <string>
#include <vector>

#include "graphsort/graphsort.hpp"

int main() {
  const std::vector<double> values{3.5, 2, 9, 11, 1, -2.2, 5};

  graphsort::SortOptions<double> opts;
  opts.on_stage = [](const graphsort::Stage<double>& stage) {
    std::cout << "  stage " << stage.name << ": " << stage.graph.size() << " arcs, "
              << stage.roots.size() << " roots\n";
  };
  std::cout << "graph_sort\n";
  const auto out = graphsort::graph_sort(values, opts);
  for (double x : out.output) std::cout << x << ' ';
  std::cout << "\n  comparisons " << out.metrics.key_comparisons << ", merge rounds "
            << out.metrics.merge_rounds << "\n";

  // Any totally ordered, copyable type works; equal keys keep their order.
  const std::vector<std::string> words{"pear", "fig", "apple", "fig"};
  const auto merged = graphsort::graph_merge_sort(words);
  std::cout << "graph_merge_sort:";
  for (const auto& w : merged.output) std::cout << ' ' << w;
  std::cout << "\n  positions:";
  for (auto v : merged.permutation) std::cout << ' ' << v;
  std::cout << '\n';

  const auto trivial = graphsort::trivial_graph_sort(values);
  std::cout << "trivial_graph_sort built " << trivial.construction_arcs << " arcs\n";
  return 0;
}
