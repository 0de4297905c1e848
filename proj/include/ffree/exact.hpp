#pragma once

// Exact expectation thresholds at tiny n.
//
// The ground set X is the n(n-1)/2 vertex pairs; a graph is a bitmask over
// pair indices. Coverage of the whole down-set F_n only has to be checked on
// its edge-maximal members: a family whose down-closure contains every
// maximal F-free graph contains every F-free graph, and any S containing a
// maximal M contains every subgraph of M. The same reduction applies to the
// fractional covering constraints.
//
// Both optimal costs are non-increasing in p because every weight
// (1-p)^{|X \ S|} is, which makes bisection on p valid for q and q_f.

#include <cstdint>
#include <vector>

#include "ffree/graph.hpp"
#include "ffree/simplex.hpp"

namespace ffree {

/// Largest n for the cover and LP computations (X has at most 10 pairs).
inline constexpr Vertex kExactMaxN = 5;
/// Largest n for exact enumeration of mu_p (2^15 graphs).
inline constexpr Vertex kExactMuMaxN = 6;
inline constexpr double kExactDefaultTolerance = 1e-4;

using EdgeMask = std::uint32_t;

LabeledGraph graph_from_mask(Vertex n, EdgeMask mask);
EdgeMask mask_from_graph(const LabeledGraph& g);

/// (1-p)^{|X \ S|}
double certificate_weight(Vertex n, EdgeMask s, double p);

struct Certificate {
  std::vector<LabeledGraph> members;
  double p = 0.0;
  double total_weight = 0.0;
  bool covers = false;
};

struct FractionalCertificate {
  std::vector<std::pair<LabeledGraph, double>> support;
  double p = 0.0;
  double total_cost = 0.0;
};

struct CoverSolution {
  double cost = 0.0;
  std::vector<EdgeMask> sets;
  std::uint64_t nodes = 0;  // branch-and-bound nodes visited
};

struct LpCover {
  double cost = 0.0;
  std::vector<EdgeMask> sets;     // one per LP row
  std::vector<double> lambda;     // optimal weights, aligned with `sets`
  std::vector<double> row_costs;  // (1-p)^{|X \ S|}, aligned with `sets`
  LpSolution solution;
};

/// All graphs on [n] for one pattern, with the edge-maximal F-free ones
/// singled out. Built once, then queried at many p.
class ExactInstance {
 public:
  /// Throws Errc::scale for n > kExactMaxN.
  ExactInstance(Vertex n, PatternGraph f);

  Vertex n() const noexcept { return n_; }
  unsigned pairs() const noexcept { return pairs_; }
  const PatternGraph& pattern() const noexcept { return f_; }
  const std::vector<EdgeMask>& maximal() const noexcept { return maximal_; }
  bool is_free(EdgeMask g) const { return free_[g]; }

  /// Minimum-weight family of sets covering every maximal F-free graph.
  CoverSolution min_cover(double p) const;

  /// Covering LP over all S with nonempty coverage (or only over S equal to
  /// the union of the maximal graphs they contain, when `closed_only`).
  LpCover lp(double p, bool closed_only = false) const;

  /// Sets S equal to the union of the maximal graphs inside them.
  const std::vector<EdgeMask>& closed_sets() const noexcept { return closed_; }

 private:
  Vertex n_;
  unsigned pairs_;
  PatternGraph f_;
  std::vector<char> free_;
  std::vector<EdgeMask> maximal_;
  std::vector<EdgeMask> closed_;
};

std::vector<LabeledGraph> enumerate_maximal_ffree(Vertex n, const PatternGraph& f);

/// Weight <= 1/2 and every maximal F-free graph inside some member.
bool verify_certificate(const Certificate& cert, const PatternGraph& f, Vertex n);

double min_cover_cost(Vertex n, double p, const PatternGraph& f);
Certificate min_cover_certificate(Vertex n, double p, const PatternGraph& f);

double lp_min_cost(Vertex n, double p, const PatternGraph& f);
FractionalCertificate lp_min_certificate(Vertex n, double p, const PatternGraph& f);

struct ThresholdSearch {
  double value = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  bool degenerate = false;  // no p < 1 reaches the budget; value is 1
  unsigned evaluations = 0;
};

ThresholdSearch q_exact(Vertex n, const PatternGraph& f, double tolerance = kExactDefaultTolerance,
                        double budget = 0.5);
ThresholdSearch qf_exact(Vertex n, const PatternGraph& f, double tolerance = kExactDefaultTolerance,
                         double budget = 0.5);

/// Number of F-free graphs on [n] with k edges, k = 0..n(n-1)/2.
std::vector<std::uint64_t> ffree_edge_profile(Vertex n, const PatternGraph& f);

/// mu_p(F_n) = sum_k a_k p^k (1-p)^{N-k}.
double exact_mu(std::span<const std::uint64_t> profile, double p);

/// The p with mu_p(F_n) = 1/2. Throws Errc::degenerate when mu is constant.
double exact_pc(Vertex n, const PatternGraph& f, double tolerance = 1e-13);

struct GapReport {
  Vertex n = 0;
  PatternGraph pattern;
  double pc = 0.0;
  double qf = 0.0;
  double q = 0.0;
  bool qf_degenerate = false;
  bool q_degenerate = false;
  double ratio_q_pc = 0.0;
  double ratio_qf_pc = 0.0;
  double tolerance = 0.0;
  bool chain_holds = false;  // pc <= qf <= q within 1e-6 + tolerance
};

GapReport gap_report(Vertex n, const PatternGraph& f, double tolerance = kExactDefaultTolerance);

}  // namespace ffree
