#pragma once

#include <vector>

#include "ffree/graph.hpp"

namespace testing_util {

using ffree::Edge;
using ffree::LabeledGraph;
using ffree::Vertex;

inline LabeledGraph cycle(Vertex n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return LabeledGraph(n, e);
}

inline LabeledGraph from_pattern(const ffree::PatternGraph& f, Vertex n) {
  return LabeledGraph(n, f.edges());
}

inline LabeledGraph from_pattern(const ffree::PatternGraph& f) {
  return from_pattern(f, f.vertex_count());
}

}  // namespace testing_util
