#pragma once

// Pattern graphs (small unlabeled F, J) and labeled graphs on [n].
//
// Labeled graphs store one bit per unordered pair, indexed colexicographically:
// pair (u, v) with u < v lives at v(v-1)/2 + u. Every module and every
// serialized edge-id array uses this convention.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ffree {

using Vertex = std::uint32_t;

/// Tag recorded next to serialized edge-id arrays.
inline constexpr std::string_view kPairIndexConvention = "colex-v1";

struct EdgeId {
  std::uint64_t index = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

constexpr std::uint64_t pair_count(std::uint64_t n) noexcept {
  return n * (n - (n > 0 ? 1 : 0)) / 2;
}

/// Throws Errc::invalid_pair unless u < v < n.
EdgeId pair_index(Vertex u, Vertex v, Vertex n);

/// Inverse of pair_index; the caller guarantees index < pair_count(n).
std::pair<Vertex, Vertex> pair_of(EdgeId id) noexcept;

using Edge = std::pair<Vertex, Vertex>;

class PatternGraph {
 public:
  PatternGraph() = default;

  // Normalizes (u,v) to u<v, sorts and deduplicates. Throws on self-loops or
  // endpoints >= vertex_count.
  PatternGraph(Vertex vertex_count, std::vector<Edge> edges);

  Vertex vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::vector<Vertex> degrees() const;
  Vertex max_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

  friend bool operator==(const PatternGraph&, const PatternGraph&) = default;

 private:
  Vertex vertex_count_ = 0;
  std::vector<Edge> edges_;
};

class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(Vertex n);
  LabeledGraph(Vertex n, std::span<const Edge> edges);

  static LabeledGraph complete(Vertex n);
  static LabeledGraph from_edge_ids(Vertex n, std::span<const EdgeId> ids);

  Vertex n() const noexcept { return n_; }
  std::uint64_t pair_count() const noexcept { return ffree::pair_count(n_); }

  bool has_edge(EdgeId id) const noexcept {
    return (words_[id.index >> 6] >> (id.index & 63)) & 1u;
  }
  bool has_edge(Vertex u, Vertex v) const;
  void set_edge(EdgeId id, bool present = true) noexcept;
  void add_edge(Vertex u, Vertex v);

  std::uint64_t edge_count() const noexcept;
  std::vector<EdgeId> edge_ids() const;
  std::vector<Edge> edges() const;

  /// |E(this) ∩ E(other)|; throws Errc::dimension on mismatched n.
  std::uint64_t shared_edge_count(const LabeledGraph& other) const;
  bool shares_edge_with(const LabeledGraph& other) const;
  bool is_subgraph_of(const LabeledGraph& other) const;

  /// Removes every edge present in `mask`.
  LabeledGraph minus(const LabeledGraph& mask) const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> mutable_words() noexcept { return words_; }

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  void check_same_n(const LabeledGraph& other) const;
  void clear_tail() noexcept;

  Vertex n_ = 0;
  std::vector<std::uint64_t> words_;
};

LabeledGraph complement(const LabeledGraph& g);

/// Order-preserving relabeling of the vertices in `subset` (sorted,
/// deduplicated first). Throws Errc::invalid_set for out-of-range vertices.
PatternGraph induced_subgraph(const PatternGraph& f, std::span<const Vertex> subset);

/// The same pattern with isolated vertices dropped (order-preserving).
PatternGraph strip_isolated(const PatternGraph& f);

/// Treats a labeled graph as a pattern on vertex_count = n.
PatternGraph to_pattern(const LabeledGraph& g);

/// Grammar: optional "n=<k>" token, then "<u>-<v>" tokens separated by
/// whitespace or commas. A preset name (triangle, K4, K5, C4, C5, P3, P4,
/// petersen; case-insensitive) may be given instead.
PatternGraph parse_pattern(std::string_view text);

/// Inverse of parse_pattern: "n=<k>" is emitted only when vertex_count is
/// not implied by the largest endpoint.
std::string to_pattern_string(const PatternGraph& f);

std::vector<std::string> preset_names();

}  // namespace ffree
