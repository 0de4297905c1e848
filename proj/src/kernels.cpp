#include "ffree/kernels.hpp"

#include <omp.h>

#include "ffree/error.hpp"
#include "ffree/subiso.hpp"

namespace ffree::kernels {

void set_workers(int workers) {
  if (workers > 0) omp_set_num_threads(workers);
}

int max_workers() { return omp_get_max_threads(); }

Battery Battery::make(Vertex n, Seed seed, std::uint64_t trials) {
  Battery battery;
  battery.n = n;
  battery.keys.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    battery.keys.push_back(derive_stream(seed, Purpose::battery, t));
  }
  return battery;
}

std::uint64_t count_free_serial(const Battery& battery, double p, const PatternGraph& f) {
  std::uint64_t free = 0;
  for (const StreamKey key : battery.keys) {
    if (!contains_copy(coupled_realize(battery.n, key, p), f)) ++free;
  }
  return free;
}

std::uint64_t count_free_parallel(const Battery& battery, double p, const PatternGraph& f) {
  fixed_cutoff(p);  // throws outside the parallel region
  const auto trials = static_cast<std::int64_t>(battery.size());
  std::uint64_t free = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : free)
  for (std::int64_t t = 0; t < trials; ++t) {
    if (!contains_copy(coupled_realize(battery.n, battery.keys[t], p), f)) ++free;
  }
  return free;
}

std::vector<TrialRecord> run_trials_serial(const AlterationExperiment& experiment,
                                           const WeightedFamily& family, Seed seed,
                                           std::uint64_t first, std::uint64_t count) {
  std::vector<TrialRecord> out;
  out.reserve(count);
  for (std::uint64_t t = 0; t < count; ++t) out.push_back(experiment.trial(family, seed, first + t));
  return out;
}

std::vector<TrialRecord> run_trials_parallel(const AlterationExperiment& experiment,
                                             const WeightedFamily& family, Seed seed,
                                             std::uint64_t first, std::uint64_t count) {
  for (const auto& h : family.members) {
    if (h.n() != experiment.n()) throw Error(Errc::dimension, "family member not on [n]");
  }
  std::vector<TrialRecord> out(count);
  const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t t = 0; t < total; ++t) {
    out[t] = experiment.trial(family, seed, first + static_cast<std::uint64_t>(t));
  }
  return out;
}

namespace {

bool binomial_draw_at_most(Seed seed, std::uint64_t draw, std::uint64_t n_trials, double p,
                           double at_most) {
  const StreamKey key = derive_stream(seed, Purpose::binomial, draw);
  return static_cast<double>(sample_binomial(key, 0, n_trials, p)) <= at_most;
}

}  // namespace

std::uint64_t count_binomial_at_most_serial(Seed seed, std::uint64_t draws,
                                            std::uint64_t n_trials, double p,
                                            double at_most) {
  std::uint64_t hits = 0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    if (binomial_draw_at_most(seed, i, n_trials, p, at_most)) ++hits;
  }
  return hits;
}

std::uint64_t count_binomial_at_most_parallel(Seed seed, std::uint64_t draws,
                                              std::uint64_t n_trials, double p,
                                              double at_most) {
  fixed_cutoff(p);  // throws outside the parallel region
  const auto total = static_cast<std::int64_t>(draws);
  std::uint64_t hits = 0;
#pragma omp parallel for schedule(static) reduction(+ : hits)
  for (std::int64_t i = 0; i < total; ++i) {
    if (binomial_draw_at_most(seed, static_cast<std::uint64_t>(i), n_trials, p, at_most)) ++hits;
  }
  return hits;
}

}  // namespace ffree::kernels
