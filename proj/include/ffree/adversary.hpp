#pragma once

// Concrete adversary families H for exercising the alteration lemmas.

#include <cstdint>

#include "ffree/alteration.hpp"

namespace ffree {

/// Smallest e with k * exp(-delta * e * p) <= 1/2, i.e. about ln(2k)/(delta p).
std::uint64_t min_edges_for_condition(std::size_t k, double p, double delta);

/// A uniformly random graph on [n] with exactly `edges` edges.
LabeledGraph random_graph_with_edges(Vertex n, std::uint64_t edges, StreamKey key);

/// k random graphs with `edges` edges each, unit weights.
WeightedFamily random_family(Vertex n, std::size_t k, std::uint64_t edges, Seed seed);

/// k random graphs whose sizes make the unit-weight condition hold by
/// construction. Throws Errc::inapplicable when that needs more than
/// n(n-1)/2 edges.
WeightedFamily condition_family(Vertex n, std::size_t k, double p, double delta, Seed seed);

/// k graphs, each a disjoint union of cliques on consecutive blocks (of size
/// `block`) of a random vertex permutation.
WeightedFamily clique_union_family(Vertex n, std::size_t k, Vertex block, Seed seed);

/// Complements of the members: a putative certificate whose refutation
/// amounts to hitting every member of `adversary`.
WeightedFamily certificate_from_adversary(const WeightedFamily& adversary);

/// Random weights in (0, 1], rescaled so the weighted condition sum equals
/// `target` (<= 1/2).
WeightedFamily with_random_weights(WeightedFamily family, double p, double delta, double target,
                                   Seed seed);

}  // namespace ffree
