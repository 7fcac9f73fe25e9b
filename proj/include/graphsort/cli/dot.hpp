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

#ifndef GRAPHSORT_CLI_DOT_HPP
#define GRAPHSORT_CLI_DOT_HPP

#include <functional>
#include <sstream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphsort/comparison_graph.hpp"
#include "graphsort/cli/bench.hpp"
#include "graphsort/cli/io.hpp"
#include "graphsort/sort.hpp"

namespace graphsort::cli {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Graphviz digraph for one stage. Tree arcs are bold: every arc of a forest
/// stage, and in a merged stage the arcs that were already in the preceding
/// forest (`previous_forest`). Arcs added by a merge are dashed; arcs of the
/// constructed graph are plain. Roots are drawn as double circles.
template <SortableValue T>
std::string to_dot(const ComparisonGraph<T>& g, const std::string& stage_name, StageKind kind,
                   const std::function<std::string(Vertex)>& label,
                   const ComparisonGraph<T>* previous_forest = nullptr,
                   const RootList* roots = nullptr) {
  std::ostringstream os;
  os << "digraph \"" << detail::dot_escape(stage_name) << "\" {\n";
  os << "  label=\"" << detail::dot_escape(stage_name) << "\";\n";
  os << "  node [shape=circle];\n";
  std::vector<bool> is_root(g.order() + 1, false);
  if (roots) {
    for (Vertex r : *roots) {
      if (r >= 1 && r <= g.order()) is_root[r] = true;
    }
  }
  for (Vertex v = 1; v <= g.order(); ++v) {
    os << "  v" << v << " [label=\"" << detail::dot_escape(label(v)) << "\"";
    if (kind != StageKind::construct && is_root[v]) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (Vertex u = 1; u <= g.order(); ++u) {
    for (Vertex v : g.out_neighbors(u)) {
      os << "  v" << u << " -> v" << v;
      switch (kind) {
        case StageKind::construct:
          break;
        case StageKind::forest:
          os << " [style=bold]";
          break;
        case StageKind::merged:
          if (previous_forest && previous_forest->has_arc(u, v)) {
            os << " [style=bold]";
          } else {
            os << " [style=dashed]";
          }
          break;
      }
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

struct DotFile {
  std::string name;  // e.g. "02_merged1.dot"
  std::string content;
};

/// Runs `algorithm` on the tokens and renders every stage it reports, in
/// order, labelling vertices with the original token text.
inline std::vector<DotFile> render_stages(std::span<const Token> tokens, Algorithm algorithm,
                                          SortOptions<double> opts = {}) {
  if (algorithm == Algorithm::reference) throw config_error("reference sort has no graph stages");
  const auto values = token_values(tokens);
  std::vector<DotFile> files;
  std::optional<ComparisonGraph<double>> last_forest;
  const auto label = [&](Vertex v) { return tokens[v - 1].text; };
  opts.on_stage = [&](const Stage<double>& stage) {
    std::string index = std::to_string(files.size());
    if (index.size() < 2) index.insert(0, 2 - index.size(), '0');
    const ComparisonGraph<double>* prev =
        stage.kind == StageKind::merged && last_forest ? &*last_forest : nullptr;
    files.push_back({index + "_" + stage.name + ".dot",
                     to_dot(stage.graph, stage.name, stage.kind, label, prev, &stage.roots)});
    if (stage.kind != StageKind::merged) last_forest = stage.graph;
  };
  run_algorithm(algorithm, values, opts);
  return files;
}

}  // namespace graphsort::cli

#endif  // GRAPHSORT_CLI_DOT_HPP
