#pragma once

// Monte Carlo location of the threshold p_c, the p at which a G(n,p) sample
// is F-free with probability 1/2.
//
// All probes of one estimate share a battery of coupled edge-mark streams,
// so the empirical F-free fraction is exactly non-increasing in p and the
// bisection never sees a non-monotone sequence.

#include <cstdint>
#include <span>
#include <vector>

#include "ffree/graph.hpp"
#include "ffree/sampling.hpp"

namespace ffree {

inline constexpr std::uint64_t kDefaultTrials = 400;
inline constexpr double kDefaultRelativeTolerance = 0.05;

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

/// Wilson score interval for `successes` out of `trials` (z = 1.96 for 95%).
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.96);

struct MuEstimate {
  double p = 0.0;
  double mu = 0.0;
  Interval ci;
  std::uint64_t free_count = 0;
  std::uint64_t trials = 0;
};

/// Fraction of F-free samples among `trials` coupled G(n,p) realizations.
MuEstimate estimate_mu(Vertex n, double p, const PatternGraph& f, std::uint64_t trials, Seed seed);

struct ProbePoint {
  double p = 0.0;
  double mu_hat = 0.0;
};

struct ThresholdEstimate {
  Vertex n = 0;
  PatternGraph pattern;
  double p_hat = 0.0;
  MuEstimate at_p_hat;
  std::uint64_t trials = 0;
  double tolerance = 0.0;
  Seed seed;
  Interval bracket;
  std::vector<ProbePoint> trace;
};

/// Bisection from [n^-2, 1 - n^-2] until the bracket width is at most
/// tolerance * midpoint. Throws Errc::degenerate when n < v_F or the
/// endpoints do not straddle 1/2.
ThresholdEstimate estimate_pc(Vertex n, const PatternGraph& f, std::uint64_t trials,
                              double tolerance, Seed seed);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit least_squares(std::span<const double> xs, std::span<const double> ys);

struct ScalingFit {
  PatternGraph pattern;
  std::vector<ThresholdEstimate> points;
  double slope = 0.0;
  double intercept = 0.0;
  double target_slope = 0.0;  // -1/m(F)
};

/// Fits log p_hat against log n. Each n gets its own derived seed, so the
/// estimate for one n does not depend on which other n are in the list.
ScalingFit scaling_fit(const PatternGraph& f, std::span<const Vertex> n_list,
                       std::uint64_t trials, double tolerance, Seed seed);

}  // namespace ffree
