#pragma once

// The random alteration construction for F-free graphs.
//
// Sample G(n,p), greedily pack edge-disjoint copies of J (a minimal subgraph
// of F with m2(J) = m2(F)) and delete every packed edge. The packing is
// inclusion-maximal, so the result has no J-copy and hence no F-copy. Each
// trial also records, per adversary graph H, the two events that together
// force the altered graph to keep an edge of H:
//
//   E_H: the sample has at least e(H)p/2 edges of H;
//   D_H: at most e(H)p/(3 e_J) packed copies touch H.
//
// Under E_H and D_H at least ceil(e(H)p/2) - e_J*floor(e(H)p/(3 e_J)) >= 1
// edges of H survive. That floor is checked on every trial.

#include <cstdint>
#include <optional>
#include <vector>

#include "ffree/density.hpp"
#include "ffree/graph.hpp"
#include "ffree/sampling.hpp"
#include "ffree/subiso.hpp"

namespace ffree {

/// Graphs on a common [n] with nonnegative weights. Holds both adversary
/// families (with weights lambda) and certificates (unit weights).
struct WeightedFamily {
  std::vector<LabeledGraph> members;
  std::vector<double> weights;

  static WeightedFamily unit(std::vector<LabeledGraph> graphs);
  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
};

struct LemmaConstants {
  double epsilon = 0.0;           // 1/(6e^2)
  double delta = 0.0;             // 1/max{9, 4 e_F}
  double admissible_p_max = 0.0;  // epsilon * n^(-1/m2(F))
  Rational m2;
};

/// 1/(6e^2): the minimum over x >= 2 of (1/(3x e^2))^(1/(x-1)), attained at x = 2.
double lemma_epsilon() noexcept;

/// Throws Errc::inapplicable when F has maximum degree < 2.
LemmaConstants lemma_constants(const PatternGraph& f, Vertex n);

struct PackingResult {
  std::vector<Copy> copies;  // pairwise edge-disjoint, in acceptance order
  LabeledGraph packed_edges;
  LabeledGraph altered;
};

/// Scans enumerate_copies(G, J) in order and keeps every copy edge-disjoint
/// from those already kept. Requires e_J >= 2.
PackingResult greedy_maximal_packing(const LabeledGraph& g, const PatternGraph& j);

struct HitRecord {
  std::size_t h_index = 0;
  std::uint64_t e_h = 0;
  std::uint64_t shared_raw = 0;
  bool event_e = false;
  std::uint64_t touched_copies = 0;
  bool event_d = false;
  std::uint64_t shared_altered = 0;
};

struct TrialRecord {
  Seed seed;
  std::uint64_t trial_index = 0;
  Vertex n = 0;
  double p = 0.0;
  bool in_regime = false;
  std::vector<HitRecord> hits;
  bool hit_all = true;
  double missed_weight = 0.0;
  std::uint64_t sampled_edges = 0;
  std::uint64_t packed_copies = 0;
  // False iff some H with E_H and D_H kept fewer edges than the floor.
  bool identity_ok = true;
};

/// Per-(F, n, p) state shared by all trials: J, the constants and the regime flag.
class AlterationExperiment {
 public:
  /// Throws Errc::inapplicable (max degree < 2) or Errc::parameter (p not in (0,1)).
  AlterationExperiment(PatternGraph f, Vertex n, double p);

  const PatternGraph& pattern() const noexcept { return f_; }
  const PatternGraph& j() const noexcept { return j_; }
  const LemmaConstants& constants() const noexcept { return constants_; }
  Vertex n() const noexcept { return n_; }
  double p() const noexcept { return p_; }
  bool in_regime() const noexcept { return p_ <= constants_.admissible_p_max; }

  struct Run {
    LabeledGraph sample;
    PackingResult packing;
  };

  /// G(n,p) from the trial stream of (seed, trial_index), packed and altered.
  Run alter(Seed seed, std::uint64_t trial_index) const;

  /// Throws Errc::dimension when a member of `family` is not on [n].
  TrialRecord trial(const WeightedFamily& family, Seed seed, std::uint64_t trial_index) const;

  /// Event bookkeeping on an already computed run.
  TrialRecord record(const WeightedFamily& family, const Run& run, Seed seed,
                     std::uint64_t trial_index) const;

 private:
  PatternGraph f_;
  PatternGraph j_;
  LemmaConstants constants_;
  Vertex n_;
  double p_;
};

/// Lower bound on the H-edges kept when E_H and D_H hold.
std::int64_t conditional_hit_floor(std::uint64_t e_h, double p, std::size_t e_j);

PackingResult alteration_graph(Vertex n, double p, const PatternGraph& f, Seed seed,
                               std::uint64_t trial_index = 0);

/// sum_H lambda(H) exp(-delta e(H) p) <= 1/2. Throws on negative weights.
bool check_family_condition(const WeightedFamily& h, double p, double delta);
double family_condition_sum(const WeightedFamily& h, double p, double delta);

TrialRecord lemma2_trial(Vertex n, double p, const PatternGraph& f, const WeightedFamily& h,
                         Seed seed, std::uint64_t trial_index = 0);

struct RefuteOutcome {
  bool success = false;
  std::optional<LabeledGraph> escaping;  // F-free and contained in no member
  std::uint64_t trials_run = 0;
  std::vector<TrialRecord> diagnostics;  // one per trial that ran
  double condition_sum = 0.0;
};

/// Turns a putative certificate into its complement family and searches for
/// an F-free graph sharing a non-edge with every member. Throws
/// Errc::inapplicable when the complements violate the family condition.
RefuteOutcome refute_certificate(const WeightedFamily& certificate, const PatternGraph& f,
                                 Vertex n, double p, std::uint64_t trial_budget, Seed seed);

struct FractionalOutcome {
  bool success = false;  // best.missed_weight < 1
  TrialRecord best;
  std::uint64_t trials_run = 0;
};

/// Runs up to `trial_budget` trials and keeps the one with least missed
/// weight (earliest on ties). Throws Errc::inapplicable when the weighted
/// condition fails.
FractionalOutcome fractional_trial(Vertex n, double p, const PatternGraph& f,
                                   const WeightedFamily& h, std::uint64_t trial_budget,
                                   Seed seed);

}  // namespace ffree
