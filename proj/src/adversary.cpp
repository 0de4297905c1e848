#include "ffree/adversary.hpp"

#include <cmath>
#include <numeric>

#include "ffree/error.hpp"

namespace ffree {

namespace {

// Multiply-shift reduction of 64 random bits onto [0, bound).
std::uint64_t bounded(StreamKey key, std::uint64_t counter, std::uint64_t bound) {
  const unsigned __int128 wide = static_cast<unsigned __int128>(stream_bits(key, counter)) * bound;
  return static_cast<std::uint64_t>(wide >> 64);
}

// First `count` entries of a Fisher-Yates shuffle of [0, size).
std::vector<std::uint64_t> partial_shuffle(std::uint64_t size, std::uint64_t count, StreamKey key) {
  std::vector<std::uint64_t> items(size);
  std::iota(items.begin(), items.end(), std::uint64_t{0});
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + bounded(key, i, size - i);
    std::swap(items[i], items[j]);
  }
  items.resize(count);
  return items;
}

}  // namespace

std::uint64_t min_edges_for_condition(std::size_t k, double p, double delta) {
  if (k == 0) return 0;
  const double exact = std::log(2.0 * static_cast<double>(k)) / (delta * p);
  auto edges = static_cast<std::uint64_t>(std::ceil(exact));
  while (static_cast<double>(k) * std::exp(-delta * static_cast<double>(edges) * p) > 0.5) {
    ++edges;
  }
  return edges;
}

LabeledGraph random_graph_with_edges(Vertex n, std::uint64_t edges, StreamKey key) {
  const std::uint64_t total = pair_count(n);
  if (edges > total) {
    throw Error(Errc::parameter, std::to_string(edges) + " edges requested but only " +
                                     std::to_string(total) + " pairs on [n]");
  }
  // Shuffle whichever side is smaller: the edges or the non-edges.
  if (edges <= total / 2) {
    LabeledGraph g(n);
    for (const auto id : partial_shuffle(total, edges, key)) g.set_edge(EdgeId{id});
    return g;
  }
  LabeledGraph g = LabeledGraph::complete(n);
  for (const auto id : partial_shuffle(total, total - edges, key)) g.set_edge(EdgeId{id}, false);
  return g;
}

WeightedFamily random_family(Vertex n, std::size_t k, std::uint64_t edges, Seed seed) {
  std::vector<LabeledGraph> members;
  for (std::size_t i = 0; i < k; ++i) {
    members.push_back(random_graph_with_edges(n, edges, derive_stream(seed, Purpose::family, i)));
  }
  return WeightedFamily::unit(std::move(members));
}

WeightedFamily condition_family(Vertex n, std::size_t k, double p, double delta, Seed seed) {
  const std::uint64_t edges = min_edges_for_condition(k, p, delta);
  if (edges > pair_count(n)) {
    throw Error(Errc::inapplicable,
                "a " + std::to_string(k) + "-member family needs " + std::to_string(edges) +
                    " edges per member, but [n] has only " + std::to_string(pair_count(n)) +
                    " pairs");
  }
  return random_family(n, k, edges, seed);
}

WeightedFamily clique_union_family(Vertex n, std::size_t k, Vertex block, Seed seed) {
  if (block < 2) throw Error(Errc::parameter, "clique blocks need at least two vertices");
  std::vector<LabeledGraph> members;
  for (std::size_t i = 0; i < k; ++i) {
    const auto perm = partial_shuffle(n, n, derive_stream(seed, Purpose::family, i));
    LabeledGraph g(n);
    for (Vertex start = 0; start < n; start += block) {
      const Vertex end = std::min<Vertex>(n, start + block);
      for (Vertex a = start; a < end; ++a) {
        for (Vertex b = a + 1; b < end; ++b) {
          g.add_edge(static_cast<Vertex>(perm[a]), static_cast<Vertex>(perm[b]));
        }
      }
    }
    members.push_back(std::move(g));
  }
  return WeightedFamily::unit(std::move(members));
}

WeightedFamily certificate_from_adversary(const WeightedFamily& adversary) {
  WeightedFamily cert;
  for (const auto& h : adversary.members) cert.members.push_back(complement(h));
  cert.weights.assign(cert.members.size(), 1.0);
  return cert;
}

WeightedFamily with_random_weights(WeightedFamily family, double p, double delta, double target,
                                   Seed seed) {
  const StreamKey key = derive_stream(seed, Purpose::family, 0xF00D);
  for (std::size_t i = 0; i < family.size(); ++i) {
    family.weights[i] = 1.0 - stream_uniform(key, i);  // (0, 1]
  }
  const double sum = family_condition_sum(family, p, delta);
  if (sum > 0.0) {
    for (auto& w : family.weights) w *= target / sum;
  }
  return family;
}

}  // namespace ffree
