#include "ffree/thresholds.hpp"

#include <cmath>

#include "ffree/density.hpp"
#include "ffree/error.hpp"
#include "ffree/kernels.hpp"

namespace ffree {

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (phat + z2 / (2.0 * n)) / (1.0 + z2 / n);
  const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
  // The endpoints are exactly 0 and 1 at the extremes; pin them against rounding.
  return {successes == 0 ? 0.0 : std::max(0.0, centre - half),
          successes == trials ? 1.0 : std::min(1.0, centre + half)};
}

namespace {

MuEstimate probe(const kernels::Battery& battery, double p, const PatternGraph& f) {
  MuEstimate est;
  est.p = p;
  est.trials = battery.size();
  est.free_count = kernels::count_free_parallel(battery, p, f);
  est.mu = static_cast<double>(est.free_count) / static_cast<double>(est.trials);
  est.ci = wilson_interval(est.free_count, est.trials);
  return est;
}

}  // namespace

MuEstimate estimate_mu(Vertex n, double p, const PatternGraph& f, std::uint64_t trials, Seed seed) {
  if (trials == 0) throw Error(Errc::parameter, "estimate_mu needs at least one trial");
  if (n == 0) throw Error(Errc::parameter, "estimate_mu needs n >= 1");
  return probe(kernels::Battery::make(n, seed, trials), p, f);
}

ThresholdEstimate estimate_pc(Vertex n, const PatternGraph& f, std::uint64_t trials,
                              double tolerance, Seed seed) {
  if (n < f.vertex_count()) {
    throw Error(Errc::degenerate, "n=" + std::to_string(n) + " < v_F=" +
                                      std::to_string(f.vertex_count()) +
                                      ": every graph is F-free");
  }
  if (!(tolerance > 0.0)) throw Error(Errc::parameter, "tolerance must be positive");
  if (trials == 0) throw Error(Errc::parameter, "estimate_pc needs at least one trial");

  const kernels::Battery battery = kernels::Battery::make(n, seed, trials);
  ThresholdEstimate out;
  out.n = n;
  out.pattern = f;
  out.trials = trials;
  out.tolerance = tolerance;
  out.seed = seed;

  const double nn = static_cast<double>(n) * static_cast<double>(n);
  double lo = 1.0 / nn;
  double hi = 1.0 - 1.0 / nn;
  auto mu_at = [&](double p) {
    const double mu = probe(battery, p, f).mu;
    out.trace.push_back({p, mu});
    return mu;
  };
  const double mu_lo = mu_at(lo);
  const double mu_hi = mu_at(hi);
  if (!(mu_lo >= 0.5 && mu_hi < 0.5)) {
    throw Error(Errc::degenerate, "bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                      "] does not straddle 1/2 (mu = " + std::to_string(mu_lo) +
                                      ", " + std::to_string(mu_hi) + ")");
  }
  while (hi - lo > tolerance * 0.5 * (lo + hi)) {
    const double mid = 0.5 * (lo + hi);
    if (mu_at(mid) >= 0.5) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.bracket = {lo, hi};
  out.p_hat = 0.5 * (lo + hi);
  out.at_p_hat = probe(battery, out.p_hat, f);
  return out;
}

LineFit least_squares(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 2) {
    throw Error(Errc::parameter, "least squares needs two or more paired points");
  }
  const double k = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw Error(Errc::parameter, "least squares needs distinct x values");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

ScalingFit scaling_fit(const PatternGraph& f, std::span<const Vertex> n_list,
                       std::uint64_t trials, double tolerance, Seed seed) {
  if (n_list.size() < 2) throw Error(Errc::parameter, "scaling fit needs at least two n values");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw Error(Errc::parameter, "n list must be increasing");
  }
  ScalingFit fit;
  fit.pattern = f;
  fit.target_slope = -1.0 / m_density(f).to_double();
  std::vector<double> xs, ys;
  for (const Vertex n : n_list) {
    fit.points.push_back(estimate_pc(n, f, trials, tolerance, derive_seed(seed, Purpose::scaling, n)));
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(fit.points.back().p_hat));
  }
  const LineFit line = least_squares(xs, ys);
  fit.slope = line.slope;
  fit.intercept = line.intercept;
  return fit;
}

}  // namespace ffree
