#include "ffree/alteration.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ffree/error.hpp"

namespace ffree {

WeightedFamily WeightedFamily::unit(std::vector<LabeledGraph> graphs) {
  WeightedFamily family;
  family.weights.assign(graphs.size(), 1.0);
  family.members = std::move(graphs);
  return family;
}

double lemma_epsilon() noexcept {
  constexpr double e = std::numbers::e;
  return 1.0 / (6.0 * e * e);
}

LemmaConstants lemma_constants(const PatternGraph& f, Vertex n) {
  if (f.max_degree() < 2) {
    throw Error(Errc::inapplicable, "pattern '" + to_pattern_string(f) +
                                        "' has maximum degree < 2");
  }
  if (n == 0) throw Error(Errc::parameter, "lemma constants need n >= 1");
  LemmaConstants c;
  c.epsilon = lemma_epsilon();
  c.delta = 1.0 / std::max(9.0, 4.0 * static_cast<double>(f.edge_count()));
  c.m2 = m2_density(f);
  c.admissible_p_max = c.epsilon * std::pow(static_cast<double>(n), -1.0 / c.m2.to_double());
  return c;
}

PackingResult greedy_maximal_packing(const LabeledGraph& g, const PatternGraph& j) {
  if (j.edge_count() < 2) {
    throw Error(Errc::parameter, "packing needs a pattern with at least two edges");
  }
  PackingResult result{{}, LabeledGraph(g.n()), g};
  for (Copy& copy : enumerate_copies(g, j)) {
    const bool disjoint = std::none_of(copy.edge_ids.begin(), copy.edge_ids.end(),
                                       [&](EdgeId id) { return result.packed_edges.has_edge(id); });
    if (!disjoint) continue;
    for (const EdgeId id : copy.edge_ids) {
      result.packed_edges.set_edge(id);
      result.altered.set_edge(id, false);
    }
    result.copies.push_back(std::move(copy));
  }
  return result;
}

std::int64_t conditional_hit_floor(std::uint64_t e_h, double p, std::size_t e_j) {
  const double x = static_cast<double>(e_h) * p;
  const double budget = x / (3.0 * static_cast<double>(e_j));
  return static_cast<std::int64_t>(std::ceil(x / 2.0)) -
         static_cast<std::int64_t>(e_j) * static_cast<std::int64_t>(std::floor(budget));
}

AlterationExperiment::AlterationExperiment(PatternGraph f, Vertex n, double p)
    : f_(std::move(f)), n_(n), p_(p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(Errc::parameter, "alteration needs p in (0,1), got " + std::to_string(p));
  }
  constants_ = lemma_constants(f_, n_);
  j_ = minimal_m2_subgraph(f_);
}

AlterationExperiment::Run AlterationExperiment::alter(Seed seed, std::uint64_t trial_index) const {
  Run run;
  run.sample = coupled_realize(n_, derive_stream(seed, Purpose::trial, trial_index), p_);
  run.packing = greedy_maximal_packing(run.sample, j_);
  return run;
}

TrialRecord AlterationExperiment::record(const WeightedFamily& family, const Run& run, Seed seed,
                                         std::uint64_t trial_index) const {
  TrialRecord rec;
  rec.seed = seed;
  rec.trial_index = trial_index;
  rec.n = n_;
  rec.p = p_;
  rec.in_regime = in_regime();
  rec.sampled_edges = run.sample.edge_count();
  rec.packed_copies = run.packing.copies.size();

  const std::size_t e_j = j_.edge_count();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const LabeledGraph& h = family.members[i];
    if (h.n() != n_) {
      throw Error(Errc::dimension, "family member " + std::to_string(i) + " is on " +
                                       std::to_string(h.n()) + " vertices, expected " +
                                       std::to_string(n_));
    }
    HitRecord hit;
    hit.h_index = i;
    hit.e_h = h.edge_count();
    hit.shared_raw = run.sample.shared_edge_count(h);
    hit.shared_altered = run.packing.altered.shared_edge_count(h);
    for (const Copy& copy : run.packing.copies) {
      if (std::any_of(copy.edge_ids.begin(), copy.edge_ids.end(),
                      [&](EdgeId id) { return h.has_edge(id); })) {
        ++hit.touched_copies;
      }
    }
    const double x = static_cast<double>(hit.e_h) * p_;
    hit.event_e = static_cast<double>(hit.shared_raw) >= x / 2.0;
    hit.event_d = static_cast<double>(hit.touched_copies) <= x / (3.0 * static_cast<double>(e_j));

    if (hit.e_h >= 1 && hit.event_e && hit.event_d) {
      const std::int64_t floor = conditional_hit_floor(hit.e_h, p_, e_j);
      if (floor < 1 || static_cast<std::int64_t>(hit.shared_altered) < floor) {
        rec.identity_ok = false;
      }
    }
    if (hit.shared_altered == 0) {
      rec.hit_all = false;
      rec.missed_weight += family.weights[i];
    }
    rec.hits.push_back(hit);
  }
  return rec;
}

TrialRecord AlterationExperiment::trial(const WeightedFamily& family, Seed seed,
                                        std::uint64_t trial_index) const {
  return record(family, alter(seed, trial_index), seed, trial_index);
}

PackingResult alteration_graph(Vertex n, double p, const PatternGraph& f, Seed seed,
                               std::uint64_t trial_index) {
  return AlterationExperiment(f, n, p).alter(seed, trial_index).packing;
}

double family_condition_sum(const WeightedFamily& h, double p, double delta) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double w = h.weights[i];
    if (!(w >= 0.0)) {
      throw Error(Errc::parameter, "family weight " + std::to_string(i) + " is negative");
    }
    sum += w * std::exp(-delta * static_cast<double>(h.members[i].edge_count()) * p);
  }
  return sum;
}

bool check_family_condition(const WeightedFamily& h, double p, double delta) {
  return family_condition_sum(h, p, delta) <= 0.5;
}

TrialRecord lemma2_trial(Vertex n, double p, const PatternGraph& f, const WeightedFamily& h,
                         Seed seed, std::uint64_t trial_index) {
  return AlterationExperiment(f, n, p).trial(h, seed, trial_index);
}

RefuteOutcome refute_certificate(const WeightedFamily& certificate, const PatternGraph& f,
                                 Vertex n, double p, std::uint64_t trial_budget, Seed seed) {
  const AlterationExperiment experiment(f, n, p);
  std::vector<LabeledGraph> complements;
  for (const LabeledGraph& s : certificate.members) {
    if (s.n() != n) throw Error(Errc::dimension, "certificate member not on [n]");
    complements.push_back(complement(s));
  }
  const WeightedFamily adversary = WeightedFamily::unit(std::move(complements));

  RefuteOutcome outcome;
  outcome.condition_sum = family_condition_sum(adversary, p, experiment.constants().delta);
  if (outcome.condition_sum > 0.5) {
    throw Error(Errc::inapplicable,
                "complement family violates the condition: sum = " +
                    std::to_string(outcome.condition_sum) + " > 1/2");
  }
  if (certificate.empty()) {
    // Nothing to escape from.
    outcome.success = true;
    outcome.escaping = LabeledGraph(n);
    return outcome;
  }

  for (std::uint64_t t = 0; t < trial_budget; ++t) {
    const auto run = experiment.alter(seed, t);
    TrialRecord rec = experiment.record(adversary, run, seed, t);
    ++outcome.trials_run;
    const bool hit_all = rec.hit_all;
    outcome.diagnostics.push_back(std::move(rec));
    if (!hit_all) continue;

    const LabeledGraph& g = run.packing.altered;
    const bool escapes = std::none_of(certificate.members.begin(), certificate.members.end(),
                                      [&](const LabeledGraph& s) { return g.is_subgraph_of(s); });
    if (escapes && !contains_copy(g, f)) {
      outcome.success = true;
      outcome.escaping = g;
      break;
    }
  }
  return outcome;
}

FractionalOutcome fractional_trial(Vertex n, double p, const PatternGraph& f,
                                   const WeightedFamily& h, std::uint64_t trial_budget,
                                   Seed seed) {
  const AlterationExperiment experiment(f, n, p);
  if (!check_family_condition(h, p, experiment.constants().delta)) {
    throw Error(Errc::inapplicable, "weighted family violates the condition");
  }
  FractionalOutcome outcome;
  for (std::uint64_t t = 0; t < trial_budget; ++t) {
    TrialRecord rec = experiment.trial(h, seed, t);
    ++outcome.trials_run;
    if (t == 0 || rec.missed_weight < outcome.best.missed_weight) outcome.best = std::move(rec);
    if (outcome.best.missed_weight == 0.0) break;
  }
  outcome.success = outcome.trials_run > 0 && outcome.best.missed_weight < 1.0;
  return outcome;
}

}  // namespace ffree
