#pragma once

// Trial-battery kernels. Each kernel has a serial reference and an OpenMP
// version; both must return identical results for identical inputs, which
// holds because every trial reads only its own stream and the reductions are
// integer sums or index-ordered writes.

#include <cstdint>
#include <vector>

#include "ffree/alteration.hpp"
#include "ffree/graph.hpp"
#include "ffree/sampling.hpp"

namespace ffree::kernels {

/// Sets the OpenMP worker count; 0 leaves the runtime default.
void set_workers(int workers);
int max_workers();

/// One coupled edge-mark stream per trial, shared by every probed p.
struct Battery {
  Vertex n = 0;
  std::vector<StreamKey> keys;

  static Battery make(Vertex n, Seed seed, std::uint64_t trials);
  std::uint64_t size() const noexcept { return keys.size(); }
};

/// Number of battery members whose realization at p has no copy of f.
std::uint64_t count_free_serial(const Battery& battery, double p, const PatternGraph& f);
std::uint64_t count_free_parallel(const Battery& battery, double p, const PatternGraph& f);

/// Trials [first, first + count) of an alteration experiment, in index order.
std::vector<TrialRecord> run_trials_serial(const AlterationExperiment& experiment,
                                           const WeightedFamily& family, Seed seed,
                                           std::uint64_t first, std::uint64_t count);
std::vector<TrialRecord> run_trials_parallel(const AlterationExperiment& experiment,
                                             const WeightedFamily& family, Seed seed,
                                             std::uint64_t first, std::uint64_t count);

/// Among `draws` samples of Bin(n_trials, p) (draw i uses stream index i),
/// how many are <= `at_most`.
std::uint64_t count_binomial_at_most_serial(Seed seed, std::uint64_t draws,
                                            std::uint64_t n_trials, double p,
                                            double at_most);
std::uint64_t count_binomial_at_most_parallel(Seed seed, std::uint64_t draws,
                                              std::uint64_t n_trials, double p,
                                              double at_most);

}  // namespace ffree::kernels
