#include "ffree/density.hpp"

#include <bit>
#include <numeric>
#include <vector>

#include "ffree/error.hpp"

namespace ffree {

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(Errc::parameter, "zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

using Mask = std::uint32_t;

struct SubsetScan {
  Vertex vertex_count;
  std::vector<Mask> neighbours;

  explicit SubsetScan(const PatternGraph& f) : vertex_count(f.vertex_count()), neighbours(f.vertex_count(), 0) {
    if (vertex_count > kMaxDensityVertices) {
      throw Error(Errc::scale, "pattern has " + std::to_string(vertex_count) +
                                   " vertices; density search is capped at " +
                                   std::to_string(kMaxDensityVertices));
    }
    for (const auto& [u, v] : f.edges()) {
      neighbours[u] |= Mask{1} << v;
      neighbours[v] |= Mask{1} << u;
    }
  }

  int induced_edges(Mask s) const {
    int twice = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1) {
      twice += std::popcount(neighbours[std::countr_zero(rest)] & s);
    }
    return twice / 2;
  }
};

// Smaller subsets first, then lexicographically by sorted vertex list.
bool precedes(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  // Lexicographic on sorted members: the first differing lowest vertex wins.
  const Mask diff = a ^ b;
  const Mask lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

struct Best {
  Rational value;
  Mask subset = 0;
  bool found = false;
};

template <typename Ratio>
Best maximize(const SubsetScan& scan, int min_size, Ratio ratio) {
  Best best;
  const Mask full = (Mask{1} << scan.vertex_count) - 1;
  for (Mask s = 1; s <= full && s != 0; ++s) {
    if (std::popcount(s) < min_size) continue;
    const Rational value = ratio(scan.induced_edges(s), std::popcount(s));
    if (!best.found || value > best.value ||
        (value == best.value && precedes(s, best.subset))) {
      best = {value, s, true};
    }
  }
  return best;
}

Rational edge_vertex_ratio(int e, int v) { return Rational(e, v); }
Rational two_density_ratio(int e, int v) { return Rational(e - 1, v - 2); }

std::vector<Vertex> members(Mask s) {
  std::vector<Vertex> out;
  for (Mask rest = s; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<Vertex>(std::countr_zero(rest)));
  }
  return out;
}

Best best_m(const PatternGraph& f) {
  if (f.vertex_count() == 0) {
    throw Error(Errc::undefined_density, "m(F) undefined for the empty pattern");
  }
  return maximize(SubsetScan(f), 1, edge_vertex_ratio);
}

Best best_m2(const PatternGraph& f) {
  if (f.vertex_count() < 3) {
    throw Error(Errc::undefined_density, "m2(F) needs a subgraph on >= 3 vertices");
  }
  return maximize(SubsetScan(f), 3, two_density_ratio);
}

}  // namespace

Rational m_density(const PatternGraph& f) { return best_m(f).value; }

Rational m2_density(const PatternGraph& f) { return best_m2(f).value; }

PatternGraph minimal_m2_subgraph(const PatternGraph& f) {
  if (f.vertex_count() < 3 || f.max_degree() < 2) {
    throw Error(Errc::undefined_density,
                "minimal m2 subgraph needs v_F >= 3 and a vertex of degree >= 2");
  }
  const Best best = best_m2(f);
  const auto subset = members(best.subset);
  return strip_isolated(induced_subgraph(f, subset));
}

DensityReport density_gap_check(const PatternGraph& f) {
  DensityReport report;
  const Best m = best_m(f);
  report.m = m.value;
  report.witness_m = induced_subgraph(f, members(m.subset));
  if (f.vertex_count() >= 3) {
    const Best m2 = best_m2(f);
    report.m2 = m2.value;
    report.witness_m2 = induced_subgraph(f, members(m2.subset));
    report.gap_holds = *report.m2 > report.m;
  }
  return report;
}

}  // namespace ffree
