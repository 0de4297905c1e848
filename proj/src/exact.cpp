#include "ffree/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>

#include "ffree/error.hpp"
#include "ffree/subiso.hpp"

namespace ffree {

LabeledGraph graph_from_mask(Vertex n, EdgeMask mask) {
  LabeledGraph g(n);
  if (!g.mutable_words().empty()) g.mutable_words()[0] = mask;
  return g;
}

EdgeMask mask_from_graph(const LabeledGraph& g) {
  if (g.pair_count() > 32) throw Error(Errc::scale, "graph too large for an edge mask");
  return g.words().empty() ? 0 : static_cast<EdgeMask>(g.words()[0]);
}

double certificate_weight(Vertex n, EdgeMask s, double p) {
  const auto missing = static_cast<int>(pair_count(n)) - std::popcount(s);
  return std::pow(1.0 - p, missing);
}

namespace {

void check_scale(Vertex n, Vertex cap) {
  if (n > cap) {
    throw Error(Errc::scale, "exact computation capped at n=" + std::to_string(cap) +
                                 ", got n=" + std::to_string(n));
  }
  if (n == 0) throw Error(Errc::parameter, "exact computation needs n >= 1");
}

std::vector<char> free_table(Vertex n, const PatternGraph& f) {
  const EdgeMask total = EdgeMask{1} << pair_count(n);
  std::vector<char> free(total, 0);
  for (EdgeMask g = 0; g < total; ++g) free[g] = !contains_copy(graph_from_mask(n, g), f);
  return free;
}

// Coverage sets over the maximal graphs, stored as 64-bit words.
class Bits {
 public:
  explicit Bits(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) c += std::popcount(words_[k] & o.words_[k]);
    return c;
  }
  Bits minus(const Bits& o) const {
    Bits out = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= ~o.words_[k];
    return out;
  }
  template <typename Fn>
  void for_each(Fn fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
        fn(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

Bits coverage(const std::vector<EdgeMask>& maximal, EdgeMask s) {
  Bits b(maximal.size());
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    if ((maximal[i] & s) == maximal[i]) b.set(i);
  }
  return b;
}

struct Candidate {
  EdgeMask set;
  double weight;
  Bits cover;
};

class CoverSearch {
 public:
  CoverSearch(const std::vector<EdgeMask>& maximal, const std::vector<EdgeMask>& closed, Vertex n,
              double p)
      : universe_(maximal.size()), by_element_(maximal.size()) {
    for (const EdgeMask s : closed) {
      candidates_.push_back({s, certificate_weight(n, s, p), coverage(maximal, s)});
    }
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      candidates_[c].cover.for_each([&](std::size_t m) { by_element_[m].push_back(c); });
    }
    for (auto& list : by_element_) {
      std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
        return candidates_[a].weight < candidates_[b].weight;
      });
    }
  }

  CoverSolution solve() {
    Bits all(universe_);
    for (std::size_t i = 0; i < universe_; ++i) all.set(i);
    greedy(all);
    std::vector<std::size_t> chosen;
    branch(all, 0.0, chosen);
    CoverSolution out;
    out.cost = best_cost_;
    for (const auto c : best_) out.sets.push_back(candidates_[c].set);
    std::sort(out.sets.begin(), out.sets.end());
    out.nodes = nodes_;
    return out;
  }

 private:
  // Weight-per-newly-covered-element greedy; seeds the incumbent.
  void greedy(Bits uncovered) {
    double cost = 0.0;
    std::vector<std::size_t> chosen;
    while (!uncovered.none()) {
      std::size_t pick = candidates_.size();
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        const int gain = candidates_[c].cover.count_and(uncovered);
        if (gain == 0) continue;
        const double ratio = candidates_[c].weight / gain;
        if (ratio < best_ratio) {
          best_ratio = ratio;
          pick = c;
        }
      }
      cost += candidates_[pick].weight;
      chosen.push_back(pick);
      uncovered = uncovered.minus(candidates_[pick].cover);
    }
    best_cost_ = cost;
    best_ = chosen;
  }

  // Each uncovered element pays at least the cheapest per-element share of
  // any set containing it; summing shares never exceeds the cost of a cover.
  double lower_bound(const Bits& uncovered) const {
    double bound = 0.0;
    uncovered.for_each([&](std::size_t m) {
      double price = std::numeric_limits<double>::infinity();
      for (const auto c : by_element_[m]) {
        price = std::min(price, candidates_[c].weight / candidates_[c].cover.count_and(uncovered));
      }
      bound += price;
    });
    return bound;
  }

  void branch(const Bits& uncovered, double cost, std::vector<std::size_t>& chosen) {
    ++nodes_;
    if (uncovered.none()) {
      if (cost < best_cost_) {
        best_cost_ = cost;
        best_ = chosen;
      }
      return;
    }
    if (cost + lower_bound(uncovered) >= best_cost_ - 1e-13 * std::max(1.0, best_cost_)) return;

    std::size_t pivot = universe_;
    uncovered.for_each([&](std::size_t m) {
      if (pivot == universe_ || by_element_[m].size() < by_element_[pivot].size()) pivot = m;
    });
    for (const auto c : by_element_[pivot]) {
      chosen.push_back(c);
      branch(uncovered.minus(candidates_[c].cover), cost + candidates_[c].weight, chosen);
      chosen.pop_back();
    }
  }

  std::size_t universe_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<std::size_t>> by_element_;
  double best_cost_ = std::numeric_limits<double>::infinity();
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::parameter, "probability " + std::to_string(p) + " outside [0,1]");
  }
}

}  // namespace

ExactInstance::ExactInstance(Vertex n, PatternGraph f)
    : n_(n), pairs_(0), f_(std::move(f)) {
  check_scale(n, kExactMaxN);
  pairs_ = static_cast<unsigned>(pair_count(n));
  free_ = free_table(n, f_);
  const EdgeMask total = EdgeMask{1} << pairs_;
  for (EdgeMask g = 0; g < total; ++g) {
    if (!free_[g]) continue;
    bool maximal = true;
    for (unsigned e = 0; e < pairs_ && maximal; ++e) {
      const EdgeMask bit = EdgeMask{1} << e;
      if (!(g & bit) && free_[g | bit]) maximal = false;
    }
    if (maximal) maximal_.push_back(g);
  }
  for (EdgeMask s = 0; s < total; ++s) {
    EdgeMask united = 0;
    bool any = false;
    for (const EdgeMask m : maximal_) {
      if ((m & s) == m) {
        united |= m;
        any = true;
      }
    }
    if (any && united == s) closed_.push_back(s);
  }
}

CoverSolution ExactInstance::min_cover(double p) const {
  check_probability(p);
  if (maximal_.empty()) return {};
  return CoverSearch(maximal_, closed_, n_, p).solve();
}

LpCover ExactInstance::lp(double p, bool closed_only) const {
  check_probability(p);
  LpCover out;
  const EdgeMask total = EdgeMask{1} << pairs_;
  if (closed_only) {
    out.sets = closed_;
  } else {
    // Sets containing no maximal graph take no part in any constraint.
    for (EdgeMask s = 0; s < total; ++s) {
      if (std::any_of(maximal_.begin(), maximal_.end(), [&](EdgeMask m) { return (m & s) == m; })) {
        out.sets.push_back(s);
      }
    }
  }
  // Solved as the dual packing LP: max sum_M y_M s.t. sum_{M <= S} y_M <= w(S).
  PackingLp packing;
  packing.c.assign(maximal_.size(), 1.0);
  for (const EdgeMask s : out.sets) {
    std::vector<double> row(maximal_.size(), 0.0);
    for (std::size_t m = 0; m < maximal_.size(); ++m) {
      if ((maximal_[m] & s) == maximal_[m]) row[m] = 1.0;
    }
    packing.a.push_back(std::move(row));
    out.row_costs.push_back(certificate_weight(n_, s, p));
  }
  packing.b = out.row_costs;
  out.solution = solve_packing_lp(packing);
  out.cost = out.solution.objective;
  out.lambda = out.solution.dual;
  return out;
}

std::vector<LabeledGraph> enumerate_maximal_ffree(Vertex n, const PatternGraph& f) {
  const ExactInstance inst(n, f);
  std::vector<LabeledGraph> out;
  for (const EdgeMask m : inst.maximal()) out.push_back(graph_from_mask(n, m));
  return out;
}

bool verify_certificate(const Certificate& cert, const PatternGraph& f, Vertex n) {
  double weight = 0.0;
  for (const auto& s : cert.members) {
    if (s.n() != n) throw Error(Errc::dimension, "certificate member not on [n]");
    weight += certificate_weight(n, mask_from_graph(s), cert.p);
  }
  if (weight > 0.5 + 1e-12) return false;
  const ExactInstance inst(n, f);
  for (const EdgeMask m : inst.maximal()) {
    const bool covered = std::any_of(cert.members.begin(), cert.members.end(), [&](const LabeledGraph& s) {
      return (m & mask_from_graph(s)) == m;
    });
    if (!covered) return false;
  }
  return true;
}

double min_cover_cost(Vertex n, double p, const PatternGraph& f) {
  return ExactInstance(n, f).min_cover(p).cost;
}

Certificate min_cover_certificate(Vertex n, double p, const PatternGraph& f) {
  const ExactInstance inst(n, f);
  const CoverSolution sol = inst.min_cover(p);
  Certificate cert;
  cert.p = p;
  cert.total_weight = sol.cost;
  cert.covers = true;
  for (const EdgeMask s : sol.sets) cert.members.push_back(graph_from_mask(n, s));
  return cert;
}

double lp_min_cost(Vertex n, double p, const PatternGraph& f) {
  return ExactInstance(n, f).lp(p).cost;
}

FractionalCertificate lp_min_certificate(Vertex n, double p, const PatternGraph& f) {
  const LpCover lp = ExactInstance(n, f).lp(p);
  FractionalCertificate cert;
  cert.p = p;
  for (std::size_t i = 0; i < lp.sets.size(); ++i) {
    if (lp.lambda[i] > 1e-12) {
      cert.support.emplace_back(graph_from_mask(n, lp.sets[i]), lp.lambda[i]);
      cert.total_cost += lp.lambda[i] * lp.row_costs[i];
    }
  }
  return cert;
}

namespace {

ThresholdSearch bisect_budget(const std::function<double(double)>& cost, double tolerance,
                              double budget) {
  if (!(tolerance > 0.0)) throw Error(Errc::parameter, "tolerance must be positive");
  ThresholdSearch out;
  auto eval = [&](double p) {
    ++out.evaluations;
    return cost(p);
  };
  if (eval(1.0) > budget) {
    // Infimum over an empty set, taken as the right endpoint.
    out.value = out.lo = out.hi = 1.0;
    out.degenerate = true;
    return out;
  }
  if (eval(0.0) <= budget) {
    out.value = out.lo = out.hi = 0.0;
    return out;
  }
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (eval(mid) <= budget) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  out.lo = lo;
  out.hi = hi;
  out.value = 0.5 * (lo + hi);
  return out;
}

}  // namespace

ThresholdSearch q_exact(Vertex n, const PatternGraph& f, double tolerance, double budget) {
  const ExactInstance inst(n, f);
  return bisect_budget([&](double p) { return inst.min_cover(p).cost; }, tolerance, budget);
}

ThresholdSearch qf_exact(Vertex n, const PatternGraph& f, double tolerance, double budget) {
  const ExactInstance inst(n, f);
  return bisect_budget([&](double p) { return inst.lp(p).cost; }, tolerance, budget);
}

std::vector<std::uint64_t> ffree_edge_profile(Vertex n, const PatternGraph& f) {
  check_scale(n, kExactMuMaxN);
  const auto pairs = static_cast<unsigned>(pair_count(n));
  std::vector<std::uint64_t> profile(pairs + 1, 0);
  const auto free = free_table(n, f);
  for (EdgeMask g = 0; g < free.size(); ++g) {
    if (free[g]) ++profile[std::popcount(g)];
  }
  return profile;
}

double exact_mu(std::span<const std::uint64_t> profile, double p) {
  const int pairs = static_cast<int>(profile.size()) - 1;
  double mu = 0.0;
  for (int k = 0; k <= pairs; ++k) {
    if (profile[k] == 0) continue;
    mu += static_cast<double>(profile[k]) * std::pow(p, k) * std::pow(1.0 - p, pairs - k);
  }
  return mu;
}

double exact_pc(Vertex n, const PatternGraph& f, double tolerance) {
  const auto profile = ffree_edge_profile(n, f);
  if (!(exact_mu(profile, 0.0) > 0.5 && exact_mu(profile, 1.0) < 0.5)) {
    throw Error(Errc::degenerate, "mu_p(F_n) does not cross 1/2 for n=" + std::to_string(n));
  }
  double lo = 0.0, hi = 1.0;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (exact_mu(profile, mid) >= 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

GapReport gap_report(Vertex n, const PatternGraph& f, double tolerance) {
  check_scale(n, kExactMaxN);
  GapReport report;
  report.n = n;
  report.pattern = f;
  report.tolerance = tolerance;
  report.pc = exact_pc(n, f);
  const ExactInstance inst(n, f);
  const auto q = bisect_budget([&](double p) { return inst.min_cover(p).cost; }, tolerance, 0.5);
  const auto qf = bisect_budget([&](double p) { return inst.lp(p).cost; }, tolerance, 0.5);
  report.q = q.value;
  report.q_degenerate = q.degenerate;
  report.qf = qf.value;
  report.qf_degenerate = qf.degenerate;
  report.ratio_q_pc = report.q / report.pc;
  report.ratio_qf_pc = report.qf / report.pc;
  const double slack = 1e-6 + tolerance;
  report.chain_holds = report.pc <= report.qf + slack && report.qf <= report.q + slack;
  return report;
}

}  // namespace ffree
