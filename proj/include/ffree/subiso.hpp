#pragma once

// Copies of a pattern inside a labeled graph. A copy is a (not necessarily
// induced) subgraph isomorphic to the pattern and is identified by its edge
// set, so automorphisms of the pattern never produce duplicates.

#include <cstdint>
#include <functional>
#include <vector>

#include "ffree/graph.hpp"

namespace ffree {

struct Copy {
  std::vector<Vertex> vertex_image;  // pattern vertex i -> vertex_image[i]
  std::vector<EdgeId> edge_ids;      // sorted ascending

  friend bool operator==(const Copy&, const Copy&) = default;
};

/// Adjacency lists built once from a labeled graph, shared by the searches.
class AdjacencyView {
 public:
  explicit AdjacencyView(const LabeledGraph& g);

  const LabeledGraph& graph() const noexcept { return *graph_; }
  Vertex n() const noexcept { return graph_->n(); }
  const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

 private:
  const LabeledGraph* graph_;
  std::vector<std::vector<Vertex>> adj_;
};

bool contains_copy(const LabeledGraph& g, const PatternGraph& f);
bool contains_copy(const AdjacencyView& g, const PatternGraph& f);

/// All copies of J, one per distinct edge set, ordered lexicographically by
/// sorted edge ids. Requires e_J >= 1.
std::vector<Copy> enumerate_copies(const LabeledGraph& g, const PatternGraph& j);

/// Number of edge-distinct J-copies in G that use at least one edge of H.
std::uint64_t copies_sharing_edge(const LabeledGraph& g, const PatternGraph& j,
                                  const LabeledGraph& h);

/// Calls `visit` with each embedding (injective, edge-preserving map of the
/// non-isolated pattern vertices) until it returns false. Embeddings related
/// by a pattern automorphism are all visited.
void for_each_embedding(const AdjacencyView& g, const PatternGraph& f,
                        const std::function<bool(std::span<const Vertex>)>& visit);

}  // namespace ffree
