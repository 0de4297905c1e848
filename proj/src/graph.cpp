#include "ffree/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

#include "ffree/error.hpp"

namespace ffree {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_pair: return "invalid-pair";
    case Errc::parse: return "parse";
    case Errc::invalid_set: return "invalid-set";
    case Errc::undefined_density: return "undefined-density";
    case Errc::dimension: return "dimension";
    case Errc::parameter: return "parameter";
    case Errc::inapplicable: return "inapplicable";
    case Errc::degenerate: return "degenerate";
    case Errc::scale: return "scale";
  }
  return "unknown";
}

EdgeId pair_index(Vertex u, Vertex v, Vertex n) {
  if (!(u < v) || !(v < n)) {
    throw Error(Errc::invalid_pair, "invalid pair (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") for n=" +
                                        std::to_string(n));
  }
  return EdgeId{std::uint64_t{v} * (v - 1) / 2 + u};
}

std::pair<Vertex, Vertex> pair_of(EdgeId id) noexcept {
  const std::uint64_t i = id.index;
  auto v = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(i))) / 2.0);
  while (v * (v - 1) / 2 > i) --v;
  while ((v + 1) * v / 2 <= i) ++v;
  return {static_cast<Vertex>(i - v * (v - 1) / 2), static_cast<Vertex>(v)};
}

// ---------------------------------------------------------------------------
// PatternGraph

PatternGraph::PatternGraph(Vertex vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (auto& [u, v] : edges_) {
    if (u == v) {
      throw Error(Errc::parameter, "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (v >= vertex_count_) {
      throw Error(Errc::parameter, "edge endpoint " + std::to_string(v) +
                                       " >= vertex_count " +
                                       std::to_string(vertex_count_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

std::vector<Vertex> PatternGraph::degrees() const {
  std::vector<Vertex> deg(vertex_count_, 0);
  for (const auto& [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

Vertex PatternGraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool PatternGraph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

// ---------------------------------------------------------------------------
// LabeledGraph

LabeledGraph::LabeledGraph(Vertex n)
    : n_(n), words_((ffree::pair_count(n) + 63) / 64, 0) {}

LabeledGraph::LabeledGraph(Vertex n, std::span<const Edge> edges)
    : LabeledGraph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

LabeledGraph LabeledGraph::complete(Vertex n) {
  LabeledGraph g(n);
  std::fill(g.words_.begin(), g.words_.end(), ~std::uint64_t{0});
  g.clear_tail();
  return g;
}

LabeledGraph LabeledGraph::from_edge_ids(Vertex n, std::span<const EdgeId> ids) {
  LabeledGraph g(n);
  for (const EdgeId id : ids) {
    if (id.index >= g.pair_count()) {
      throw Error(Errc::invalid_pair, "edge id " + std::to_string(id.index) +
                                          " out of range for n=" + std::to_string(n));
    }
    g.set_edge(id);
  }
  return g;
}

bool LabeledGraph::has_edge(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  return has_edge(pair_index(u, v, n_));
}

void LabeledGraph::set_edge(EdgeId id, bool present) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (id.index & 63);
  if (present) {
    words_[id.index >> 6] |= bit;
  } else {
    words_[id.index >> 6] &= ~bit;
  }
}

void LabeledGraph::add_edge(Vertex u, Vertex v) {
  if (u > v) std::swap(u, v);
  set_edge(pair_index(u, v, n_));
}

std::uint64_t LabeledGraph::edge_count() const noexcept {
  std::uint64_t total = 0;
  for (const auto w : words_) total += static_cast<std::uint64_t>(std::popcount(w));
  return total;
}

std::vector<EdgeId> LabeledGraph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(edge_count());
  for (std::size_t k = 0; k < words_.size(); ++k) {
    std::uint64_t w = words_[k];
    while (w != 0) {
      const int bit = std::countr_zero(w);
      out.push_back(EdgeId{k * 64 + static_cast<std::uint64_t>(bit)});
      w &= w - 1;
    }
  }
  return out;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  for (const EdgeId id : edge_ids()) out.push_back(pair_of(id));
  return out;
}

void LabeledGraph::check_same_n(const LabeledGraph& other) const {
  if (other.n_ != n_) {
    throw Error(Errc::dimension, "graphs on different vertex counts (" +
                                     std::to_string(n_) + " vs " +
                                     std::to_string(other.n_) + ")");
  }
}

void LabeledGraph::clear_tail() noexcept {
  const std::uint64_t used = pair_count() % 64;
  if (used != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << used) - 1;
  }
}

std::uint64_t LabeledGraph::shared_edge_count(const LabeledGraph& other) const {
  check_same_n(other);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    total += static_cast<std::uint64_t>(std::popcount(words_[k] & other.words_[k]));
  }
  return total;
}

bool LabeledGraph::shares_edge_with(const LabeledGraph& other) const {
  check_same_n(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & other.words_[k]) != 0) return true;
  }
  return false;
}

bool LabeledGraph::is_subgraph_of(const LabeledGraph& other) const {
  check_same_n(other);
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if ((words_[k] & ~other.words_[k]) != 0) return false;
  }
  return true;
}

LabeledGraph LabeledGraph::minus(const LabeledGraph& mask) const {
  check_same_n(mask);
  LabeledGraph out = *this;
  for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= ~mask.words_[k];
  return out;
}

LabeledGraph complement(const LabeledGraph& g) {
  LabeledGraph out = LabeledGraph::complete(g.n());
  auto dst = out.mutable_words();
  const auto src = g.words();
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] &= ~src[k];
  return out;
}

// ---------------------------------------------------------------------------
// Transforms

PatternGraph induced_subgraph(const PatternGraph& f, std::span<const Vertex> subset) {
  std::vector<Vertex> keep(subset.begin(), subset.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (const Vertex v : keep) {
    if (v >= f.vertex_count()) {
      throw Error(Errc::invalid_set, "vertex " + std::to_string(v) +
                                         " not in pattern on " +
                                         std::to_string(f.vertex_count()) + " vertices");
    }
  }
  constexpr Vertex kAbsent = ~Vertex{0};
  std::vector<Vertex> relabel(f.vertex_count(), kAbsent);
  for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<Vertex>(i);

  std::vector<Edge> edges;
  for (const auto& [u, v] : f.edges()) {
    if (relabel[u] != kAbsent && relabel[v] != kAbsent) {
      edges.emplace_back(relabel[u], relabel[v]);
    }
  }
  return PatternGraph(static_cast<Vertex>(keep.size()), std::move(edges));
}

PatternGraph strip_isolated(const PatternGraph& f) {
  const auto deg = f.degrees();
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (deg[v] > 0) keep.push_back(v);
  }
  return induced_subgraph(f, keep);
}

PatternGraph to_pattern(const LabeledGraph& g) {
  return PatternGraph(g.n(), g.edges());
}

// ---------------------------------------------------------------------------
// Pattern text

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

PatternGraph complete_pattern(Vertex k) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) {
    for (Vertex u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  return PatternGraph(k, std::move(edges));
}

PatternGraph cycle_pattern(Vertex k) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
  return PatternGraph(k, std::move(edges));
}

// P_k here is the path on k vertices (P3 has two edges).
PatternGraph path_pattern(Vertex k) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return PatternGraph(k, std::move(edges));
}

PatternGraph petersen_pattern() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return PatternGraph(10, std::move(edges));
}

bool lookup_preset(std::string_view name, PatternGraph& out) {
  const std::string key = lowercase(name);
  if (key == "triangle" || key == "k3") out = complete_pattern(3);
  else if (key == "k4") out = complete_pattern(4);
  else if (key == "k5") out = complete_pattern(5);
  else if (key == "c4") out = cycle_pattern(4);
  else if (key == "c5") out = cycle_pattern(5);
  else if (key == "p3") out = path_pattern(3);
  else if (key == "p4") out = path_pattern(4);
  else if (key == "petersen") out = petersen_pattern();
  else return false;
  return true;
}

bool is_separator(char c) {
  return c == ',' || std::isspace(static_cast<unsigned char>(c));
}

Vertex parse_vertex(std::string_view digits, std::size_t position) {
  if (digits.empty()) throw ParseError(position, "expected vertex number");
  Vertex value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError(position, "malformed vertex '" + std::string(digits) + "'");
  }
  return value;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"triangle", "K4", "K5", "C4", "C5", "P3", "P4", "petersen"};
}

PatternGraph parse_pattern(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n,");
  const auto last = text.find_last_not_of(" \t\r\n,");
  if (first != std::string_view::npos) {
    PatternGraph preset;
    if (lookup_preset(text.substr(first, last - first + 1), preset)) return preset;
  }

  std::optional<Vertex> declared;
  std::vector<Edge> edges;
  Vertex implied = 0;
  std::size_t i = 0;
  bool first_token = true;
  while (i < text.size()) {
    if (is_separator(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_separator(text[i])) ++i;
    const std::string_view token = text.substr(start, i - start);

    if (token.starts_with("n=")) {
      if (!first_token) throw ParseError(start, "'n=' must be the first token");
      declared = parse_vertex(token.substr(2), start + 2);
    } else {
      const auto dash = token.find('-');
      if (dash == std::string_view::npos) {
        throw ParseError(start, "malformed token '" + std::string(token) + "'");
      }
      const Vertex u = parse_vertex(token.substr(0, dash), start);
      const Vertex v = parse_vertex(token.substr(dash + 1), start + dash + 1);
      if (u == v) throw ParseError(start, "self-loop '" + std::string(token) + "'");
      edges.emplace_back(std::min(u, v), std::max(u, v));
      implied = std::max(implied, std::max(u, v) + 1);
    }
    first_token = false;
  }
  if (declared && *declared < implied) {
    throw ParseError(0, "n=" + std::to_string(*declared) +
                            " smaller than largest endpoint + 1 (" +
                            std::to_string(implied) + ")");
  }
  return PatternGraph(declared.value_or(implied), std::move(edges));
}

std::string to_pattern_string(const PatternGraph& f) {
  Vertex implied = 0;
  for (const auto& [u, v] : f.edges()) implied = std::max(implied, v + 1);
  std::string out;
  if (f.vertex_count() != implied || f.edges().empty()) {
    out = "n=" + std::to_string(f.vertex_count());
  }
  for (const auto& [u, v] : f.edges()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

}  // namespace ffree
