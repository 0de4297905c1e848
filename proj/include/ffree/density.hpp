#pragma once

// Exact graph densities m(F) = max e_J/v_J and m2(F) = max (e_J-1)/(v_J-2).
//
// Both maxima are attained on induced subgraphs: at a fixed vertex set,
// adding available edges only raises either ratio. The search therefore
// walks the 2^v_F vertex subsets and never enumerates edge subsets.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "ffree/graph.hpp"

namespace ffree {

/// Patterns larger than this are rejected (2^16 vertex subsets).
inline constexpr Vertex kMaxDensityVertices = 16;

class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  /// "p/q", always with an explicit denominator.
  std::string str() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct DensityReport {
  Rational m;
  std::optional<Rational> m2;
  PatternGraph witness_m;
  std::optional<PatternGraph> witness_m2;
  bool gap_holds = false;
};

Rational m_density(const PatternGraph& f);
Rational m2_density(const PatternGraph& f);

/// J = F[S] with isolated vertices removed, S a smallest vertex set achieving
/// m2(F) (lexicographically first among ties). No proper subgraph of J
/// reaches m2(F). Requires v_F >= 3 and a vertex of degree >= 2.
PatternGraph minimal_m2_subgraph(const PatternGraph& f);

DensityReport density_gap_check(const PatternGraph& f);

}  // namespace ffree
