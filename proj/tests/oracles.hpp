#pragma once

// Brute-force reference implementations. Nothing here calls into the library
// except for plain data types, so agreement is a real cross-check.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ffree/graph.hpp"

namespace oracle {

using ffree::Edge;
using ffree::PatternGraph;
using ffree::Vertex;

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

inline bool less(const Frac& a, const Frac& b) { return a.num * b.den < b.num * a.den; }

// m(F) by walking every edge subset and every vertex set that contains it.
inline Frac brute_m(const PatternGraph& f) {
  const auto& edges = f.edges();
  const Vertex v = f.vertex_count();
  Frac best{0, 1};
  for (std::uint32_t vs = 1; vs < (1u << v); ++vs) {
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((vs >> edges[i].first & 1) && (vs >> edges[i].second & 1)) inside.push_back(i);
    }
    const std::int64_t s = std::popcount(vs);
    for (std::uint32_t es = 0; es < (1u << inside.size()); ++es) {
      const Frac r{std::popcount(es), s};
      if (less(best, r)) best = r;
    }
  }
  return best;
}

inline std::optional<Frac> brute_m2(const PatternGraph& f) {
  const auto& edges = f.edges();
  const Vertex v = f.vertex_count();
  std::optional<Frac> best;
  for (std::uint32_t vs = 1; vs < (1u << v); ++vs) {
    const std::int64_t s = std::popcount(vs);
    if (s < 3) continue;
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if ((vs >> edges[i].first & 1) && (vs >> edges[i].second & 1)) inside.push_back(i);
    }
    for (std::uint32_t es = 0; es < (1u << inside.size()); ++es) {
      const Frac r{std::popcount(es) - 1, s - 2};
      if (!best || less(*best, r)) best = r;
    }
  }
  return best;
}

// Same maxima in time 3^e: every edge subset E' is scored against the
// smallest admissible vertex set containing its endpoints, and m2 also
// against every larger one (the numerator may be negative).
inline std::pair<Frac, std::optional<Frac>> fast_brute_densities(const PatternGraph& f) {
  const auto& edges = f.edges();
  const std::int64_t v = f.vertex_count();
  Frac m{0, 1};
  std::optional<Frac> m2;
  for (std::uint32_t es = 0; es < (1u << edges.size()); ++es) {
    std::uint32_t span = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (es >> i & 1) span |= (1u << edges[i].first) | (1u << edges[i].second);
    }
    const std::int64_t e = std::popcount(es);
    const std::int64_t s = std::max<std::int64_t>(std::popcount(span), 1);
    if (s <= v && less(m, Frac{e, s})) m = Frac{e, s};
    for (std::int64_t t = std::max<std::int64_t>(s, 3); t <= v; ++t) {
      const Frac r{e - 1, t - 2};
      if (!m2 || less(*m2, r)) m2 = r;
    }
  }
  return {m, m2};
}

/// Graph on [v] from an edge mask over the colex pairs of [v].
inline PatternGraph pattern_from_mask(Vertex v, std::uint32_t mask) {
  std::vector<Edge> edges;
  std::uint32_t bit = 0;
  for (Vertex b = 1; b < v; ++b) {
    for (Vertex a = 0; a < b; ++a, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(a, b);
    }
  }
  return PatternGraph(v, std::move(edges));
}

// ---------------------------------------------------------------------------
// Copies by exhausting injective maps of all pattern vertices.

inline bool adjacent(const std::vector<std::vector<char>>& adj, Vertex a, Vertex b) {
  return adj[a][b] != 0;
}

inline std::vector<std::vector<char>> adjacency(Vertex n, const std::vector<Edge>& edges) {
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b] : edges) adj[a][b] = adj[b][a] = 1;
  return adj;
}

inline std::uint64_t colex(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return static_cast<std::uint64_t>(b) * (b - 1) / 2 + a;
}

inline std::set<std::vector<std::uint64_t>> brute_copies(Vertex n, const std::vector<Edge>& g_edges,
                                                         const PatternGraph& j) {
  const auto adj = adjacency(n, g_edges);
  std::set<std::vector<std::uint64_t>> out;
  const Vertex k = j.vertex_count();
  if (k > n) return out;
  std::vector<Vertex> image(k);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, Vertex depth) -> void {
    if (depth == k) {
      std::vector<std::uint64_t> ids;
      for (auto [a, b] : j.edges()) {
        if (!adjacent(adj, image[a], image[b])) return;
        ids.push_back(colex(image[a], image[b]));
      }
      std::sort(ids.begin(), ids.end());
      out.insert(std::move(ids));
      return;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      image[depth] = x;
      self(self, depth + 1);
      used[x] = 0;
    }
  };
  rec(rec, 0);
  return out;
}

inline bool brute_contains(Vertex n, const std::vector<Edge>& g_edges, const PatternGraph& f) {
  if (f.edges().empty()) return f.vertex_count() <= n;
  return !brute_copies(n, g_edges, f).empty();
}

/// brute_contains on the non-isolated part of a sparse host graph. Spare
/// isolated host vertices still count toward isolated pattern vertices.
inline bool brute_contains_sparse(Vertex n, const std::vector<Edge>& g_edges, const PatternGraph& f) {
  std::map<Vertex, Vertex> relabel;
  for (auto [a, b] : g_edges) {
    relabel.emplace(a, 0);
    relabel.emplace(b, 0);
  }
  Vertex next = 0;
  for (auto& [v, id] : relabel) id = next++;
  std::vector<Edge> compact;
  for (auto [a, b] : g_edges) compact.emplace_back(relabel[a], relabel[b]);
  const PatternGraph core = [&] {
    std::vector<char> used(f.vertex_count(), 0);
    for (auto [a, b] : f.edges()) used[a] = used[b] = 1;
    std::vector<Vertex> map(f.vertex_count(), 0);
    Vertex k = 0;
    for (Vertex v = 0; v < f.vertex_count(); ++v)
      if (used[v]) map[v] = k++;
    std::vector<Edge> e;
    for (auto [a, b] : f.edges()) e.emplace_back(map[a], map[b]);
    return PatternGraph(k, e);
  }();
  if (f.vertex_count() > n) return false;
  return brute_contains(next, compact, core);
}

// ---------------------------------------------------------------------------
// Whole-ground-set enumeration at tiny n. Graphs are masks over colex pairs.

inline std::vector<Edge> edges_of_mask(Vertex n, std::uint32_t mask) {
  std::vector<Edge> edges;
  std::uint32_t bit = 0;
  for (Vertex b = 1; b < n; ++b) {
    for (Vertex a = 0; a < b; ++a, ++bit) {
      if (mask >> bit & 1) edges.emplace_back(a, b);
    }
  }
  return edges;
}

inline std::vector<char> free_table(Vertex n, const PatternGraph& f) {
  const unsigned pairs = n * (n - 1) / 2;
  std::vector<char> free(std::size_t{1} << pairs);
  for (std::uint32_t g = 0; g < free.size(); ++g) free[g] = !brute_contains(n, edges_of_mask(n, g), f);
  return free;
}

inline std::vector<std::uint32_t> brute_maximal(Vertex n, const std::vector<char>& free) {
  const unsigned pairs = n * (n - 1) / 2;
  std::vector<std::uint32_t> out;
  for (std::uint32_t g = 0; g < free.size(); ++g) {
    if (!free[g]) continue;
    bool maximal = true;
    for (unsigned b = 0; b < pairs && maximal; ++b) {
      if (!(g >> b & 1) && free[g | (1u << b)]) maximal = false;
    }
    if (maximal) out.push_back(g);
  }
  return out;
}

inline double brute_mu(Vertex n, const std::vector<char>& free, double p) {
  const int pairs = static_cast<int>(n * (n - 1) / 2);
  double mu = 0.0;
  for (std::uint32_t g = 0; g < free.size(); ++g) {
    if (!free[g]) continue;
    const int e = std::popcount(g);
    mu += std::pow(p, e) * std::pow(1.0 - p, pairs - e);
  }
  return mu;
}

inline double weight(unsigned pairs, std::uint32_t s, double p) {
  return std::pow(1.0 - p, static_cast<int>(pairs) - std::popcount(s));
}

/// Minimum-weight cover by dynamic programming over subsets of the maximal
/// graphs, trying every S in the ground set's power set at each step.
inline double dp_min_cover(Vertex n, const std::vector<std::uint32_t>& maximal, double p) {
  const unsigned pairs = n * (n - 1) / 2;
  const std::size_t k = maximal.size();
  std::vector<std::uint64_t> cover_of(std::size_t{1} << pairs, 0);
  for (std::uint32_t s = 0; s < cover_of.size(); ++s) {
    for (std::size_t i = 0; i < k; ++i) {
      if ((maximal[i] & ~s) == 0) cover_of[s] |= std::uint64_t{1} << i;
    }
  }
  const std::uint64_t full = (k == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1;
  std::vector<double> best(full + 1, INFINITY);
  best[0] = 0.0;
  for (std::uint64_t u = 1; u <= full; ++u) {
    // Cover the lowest uncovered maximal graph first; every cover must.
    const int low = std::countr_zero(u);
    for (std::uint32_t s = 0; s < cover_of.size(); ++s) {
      if (!(cover_of[s] >> low & 1)) continue;
      const double c = weight(pairs, s, p) + best[u & ~cover_of[s]];
      best[u] = std::min(best[u], c);
    }
  }
  return best[full];
}

/// Cheapest family over the full power set of the power set (n = 3 only).
inline double exhaustive_min_cover_n3(const std::vector<std::uint32_t>& maximal, double p) {
  double best = INFINITY;
  for (std::uint32_t family = 0; family < 256u; ++family) {
    double cost = 0.0;
    for (std::uint32_t s = 0; s < 8; ++s) {
      if (family >> s & 1) cost += weight(3, s, p);
    }
    bool covers = true;
    for (std::uint32_t m : maximal) {
      bool hit = false;
      for (std::uint32_t s = 0; s < 8; ++s) {
        if ((family >> s & 1) && (m & ~s) == 0) hit = true;
      }
      covers = covers && hit;
    }
    if (covers) best = std::min(best, cost);
  }
  return best;
}

/// Columns of the covering LP with dominated sets removed: for each distinct
/// coverage pattern, the cheapest set realizing it.
struct CoverColumns {
  std::vector<std::uint64_t> coverage;
  std::vector<std::uint32_t> sets;
};

inline CoverColumns cover_columns(Vertex n, const std::vector<std::uint32_t>& maximal) {
  const unsigned pairs = n * (n - 1) / 2;
  std::map<std::uint64_t, std::uint32_t> best;
  for (std::uint32_t s = 0; s < (1u << pairs); ++s) {
    std::uint64_t cov = 0;
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      if ((maximal[i] & ~s) == 0) cov |= std::uint64_t{1} << i;
    }
    if (cov == 0) continue;
    auto it = best.find(cov);
    if (it == best.end() || std::popcount(s) < std::popcount(it->second)) best[cov] = s;
  }
  CoverColumns out;
  for (auto [cov, s] : best) {
    out.coverage.push_back(cov);
    out.sets.push_back(s);
  }
  return out;
}

}  // namespace oracle
