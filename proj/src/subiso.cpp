#include "ffree/subiso.hpp"

#include <algorithm>

#include "ffree/error.hpp"

namespace ffree {

namespace {

constexpr Vertex kUnmapped = ~Vertex{0};

inline std::uint64_t colex(Vertex u, Vertex v) noexcept {
  if (u > v) std::swap(u, v);
  return std::uint64_t{v} * (v - 1) / 2 + u;
}

// Search order over the non-isolated pattern vertices: start from a vertex
// of maximum degree, then keep taking the vertex with the most already-placed
// neighbours (ties: higher degree, then lower index).
struct SearchPlan {
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> back;  // placed neighbours of order[i]
  std::vector<std::size_t> degree;        // pattern degree of order[i]

  explicit SearchPlan(const PatternGraph& f) {
    const auto deg = f.degrees();
    const Vertex v_f = f.vertex_count();
    std::vector<std::vector<Vertex>> adj(v_f);
    for (const auto& [u, v] : f.edges()) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    std::vector<char> placed(v_f, 0);
    std::vector<int> placed_nbrs(v_f, 0);
    for (;;) {
      Vertex pick = kUnmapped;
      for (Vertex v = 0; v < v_f; ++v) {
        if (placed[v] || deg[v] == 0) continue;
        if (pick == kUnmapped || placed_nbrs[v] > placed_nbrs[pick] ||
            (placed_nbrs[v] == placed_nbrs[pick] && deg[v] > deg[pick])) {
          pick = v;
        }
      }
      if (pick == kUnmapped) break;
      std::vector<Vertex> earlier;
      for (const Vertex w : adj[pick]) {
        if (placed[w]) earlier.push_back(w);
      }
      order.push_back(pick);
      back.push_back(std::move(earlier));
      degree.push_back(deg[pick]);
      placed[pick] = 1;
      for (const Vertex w : adj[pick]) ++placed_nbrs[w];
    }
  }
};

class Matcher {
 public:
  Matcher(const AdjacencyView& g, const PatternGraph& f,
          const std::function<bool(std::span<const Vertex>)>& visit)
      : g_(g), plan_(f), visit_(visit), image_(f.vertex_count(), kUnmapped), used_(g.n(), 0) {}

  void run() {
    if (plan_.order.empty()) return;
    extend(0);
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == plan_.order.size()) return visit_(image_);
    const Vertex pv = plan_.order[depth];
    const auto& back = plan_.back[depth];
    if (back.empty()) {
      for (Vertex c = 0; c < g_.n(); ++c) {
        if (!try_candidate(depth, pv, c)) return false;
      }
    } else {
      // Scan the smallest neighbourhood among the placed neighbours.
      Vertex anchor = image_[back.front()];
      for (const Vertex w : back) {
        if (g_.degree(image_[w]) < g_.degree(anchor)) anchor = image_[w];
      }
      for (const Vertex c : g_.neighbours(anchor)) {
        if (!try_candidate(depth, pv, c)) return false;
      }
    }
    return true;
  }

  // Returns false when the visitor asked to stop.
  bool try_candidate(std::size_t depth, Vertex pv, Vertex c) {
    if (used_[c] || g_.degree(c) < plan_.degree[depth]) return true;
    for (const Vertex w : plan_.back[depth]) {
      if (!g_.adjacent(image_[w], c)) return true;
    }
    used_[c] = 1;
    image_[pv] = c;
    const bool keep_going = extend(depth + 1);
    image_[pv] = kUnmapped;
    used_[c] = 0;
    return keep_going;
  }

  const AdjacencyView& g_;
  SearchPlan plan_;
  const std::function<bool(std::span<const Vertex>)>& visit_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

std::vector<EdgeId> image_edges(const PatternGraph& f, std::span<const Vertex> image) {
  std::vector<EdgeId> ids;
  ids.reserve(f.edge_count());
  for (const auto& [u, v] : f.edges()) ids.push_back(EdgeId{colex(image[u], image[v])});
  std::sort(ids.begin(), ids.end());
  return ids;
}

// Isolated pattern vertices go to the smallest vertices the copy leaves free.
std::vector<Vertex> complete_image(std::span<const Vertex> image, Vertex n) {
  std::vector<Vertex> out(image.begin(), image.end());
  std::vector<char> used(n, 0);
  for (const Vertex v : out) {
    if (v != kUnmapped) used[v] = 1;
  }
  Vertex next = 0;
  for (auto& v : out) {
    if (v != kUnmapped) continue;
    while (used[next]) ++next;
    v = next;
    used[next] = 1;
  }
  return out;
}

}  // namespace

AdjacencyView::AdjacencyView(const LabeledGraph& g) : graph_(&g), adj_(g.n()) {
  for (const EdgeId id : g.edge_ids()) {
    const auto [u, v] = pair_of(id);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
}

bool AdjacencyView::adjacent(Vertex u, Vertex v) const {
  return u != v && graph_->has_edge(EdgeId{colex(u, v)});
}

void for_each_embedding(const AdjacencyView& g, const PatternGraph& f,
                        const std::function<bool(std::span<const Vertex>)>& visit) {
  if (f.vertex_count() > g.n()) return;
  Matcher(g, f, visit).run();
}

bool contains_copy(const AdjacencyView& g, const PatternGraph& f) {
  if (f.vertex_count() > g.n()) return false;
  if (f.edge_count() == 0) return true;
  bool found = false;
  for_each_embedding(g, f, [&](std::span<const Vertex>) {
    found = true;
    return false;
  });
  return found;
}

bool contains_copy(const LabeledGraph& g, const PatternGraph& f) {
  if (f.vertex_count() > g.n()) return false;
  if (f.edge_count() == 0) return true;
  if (g.edge_count() < f.edge_count()) return false;
  return contains_copy(AdjacencyView(g), f);
}

std::vector<Copy> enumerate_copies(const LabeledGraph& g, const PatternGraph& j) {
  if (j.edge_count() == 0) {
    throw Error(Errc::parameter, "enumerate_copies needs a pattern with at least one edge");
  }
  std::vector<Copy> copies;
  if (g.edge_count() < j.edge_count()) return copies;
  const AdjacencyView view(g);
  for_each_embedding(view, j, [&](std::span<const Vertex> image) {
    copies.push_back(Copy{complete_image(image, g.n()), image_edges(j, image)});
    return true;
  });
  // Keep the embedding with the lexicographically smallest image per edge set.
  std::sort(copies.begin(), copies.end(), [](const Copy& a, const Copy& b) {
    if (a.edge_ids != b.edge_ids) return a.edge_ids < b.edge_ids;
    return a.vertex_image < b.vertex_image;
  });
  copies.erase(std::unique(copies.begin(), copies.end(),
                           [](const Copy& a, const Copy& b) { return a.edge_ids == b.edge_ids; }),
               copies.end());
  return copies;
}

std::uint64_t copies_sharing_edge(const LabeledGraph& g, const PatternGraph& j,
                                  const LabeledGraph& h) {
  if (g.n() != h.n()) {
    throw Error(Errc::dimension, "copies_sharing_edge: G and H on different vertex counts");
  }
  std::uint64_t count = 0;
  for (const Copy& c : enumerate_copies(g, j)) {
    if (std::any_of(c.edge_ids.begin(), c.edge_ids.end(),
                    [&](EdgeId id) { return h.has_edge(id); })) {
      ++count;
    }
  }
  return count;
}

}  // namespace ffree
