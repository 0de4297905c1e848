#include <doctest.h>

#include <cmath>

#include "ffree/error.hpp"
#include "ffree/exact.hpp"
#include "ffree/thresholds.hpp"
#include "oracles.hpp"

using namespace ffree;

TEST_CASE("wilson interval") {
  const Interval half = wilson_interval(50, 100);
  CHECK(half.lo == doctest::Approx(0.4038).epsilon(1e-3));
  CHECK(half.hi == doctest::Approx(0.5962).epsilon(1e-3));
  const Interval zero = wilson_interval(0, 100);
  CHECK(zero.lo == 0.0);
  CHECK(zero.hi > 0.0);
  const Interval all = wilson_interval(100, 100);
  CHECK(all.hi == doctest::Approx(1.0));
  CHECK(all.lo < 1.0);
}

TEST_CASE("estimate_mu edge cases") {
  const PatternGraph tri = parse_pattern("triangle");
  CHECK(estimate_mu(12, 0.0, tri, 100, Seed{1}).mu == 1.0);
  CHECK(estimate_mu(12, 1.0, tri, 100, Seed{1}).mu == 0.0);
  CHECK(estimate_mu(2, 1.0, tri, 100, Seed{1}).mu == 1.0);
  const MuEstimate m = estimate_mu(3, 0.5, tri, 4000, Seed{1});
  CHECK(m.ci.lo <= 0.875);
  CHECK(0.875 <= m.ci.hi);
}

TEST_CASE("estimate_mu agrees with exact enumeration") {
  // Per setting, 100 independent runs; the coverage rate is pooled over all
  // settings, with a looser per-setting floor against gross bias.
  int inside_total = 0, runs_total = 0;
  for (const char* name : {"triangle", "C4"}) {
    const PatternGraph f = parse_pattern(name);
    for (Vertex n = 3; n <= 5; ++n) {
      const auto free = oracle::free_table(n, f);
      for (double p : {0.2, 0.5, 0.7}) {
        const double exact = oracle::brute_mu(n, free, p);
        CHECK(exact_mu(ffree_edge_profile(n, f), p) == doctest::Approx(exact).epsilon(1e-12));
        int inside = 0;
        for (std::uint64_t rep = 0; rep < 100; ++rep) {
          const MuEstimate est = estimate_mu(n, p, f, 200, Seed{1000 + rep});
          inside += (est.ci.lo <= exact + 1e-12 && exact - 1e-12 <= est.ci.hi) ? 1 : 0;
        }
        CAPTURE(name);
        CAPTURE(n);
        CAPTURE(p);
        CHECK(inside >= 85);
        inside_total += inside;
        runs_total += 100;
      }
    }
  }
  CHECK(inside_total >= 0.93 * runs_total);
}

TEST_CASE("estimate_pc small cases") {
  const PatternGraph tri = parse_pattern("triangle");
  const ThresholdEstimate three = estimate_pc(3, tri, 2000, 0.01, Seed{3});
  const double target = std::cbrt(0.5);
  CHECK(std::abs(three.p_hat - target) <= 0.05);
  for (std::size_t i = 1; i < three.trace.size(); ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (three.trace[k].p <= three.trace[i].p) CHECK(three.trace[k].mu_hat >= three.trace[i].mu_hat);
      if (three.trace[k].p >= three.trace[i].p) CHECK(three.trace[k].mu_hat <= three.trace[i].mu_hat);
    }
  }
  const double half_width = (three.at_p_hat.ci.hi - three.at_p_hat.ci.lo) / 2;
  CHECK(std::abs(three.at_p_hat.mu - 0.5) <= half_width + 0.05);
  CHECK(three.bracket.hi - three.bracket.lo <= 0.01 * three.p_hat + 1e-12);

  const ThresholdEstimate four = estimate_pc(4, tri, 2000, 0.01, Seed{4});
  CHECK(std::abs(four.p_hat - exact_pc(4, tri)) <= 0.05);

  const ThresholdEstimate small = estimate_pc(32, tri, 300, 0.05, Seed{5});
  const ThresholdEstimate large = estimate_pc(128, tri, 300, 0.05, Seed{5});
  CHECK(large.p_hat < small.p_hat);

  CHECK_THROWS_AS(estimate_pc(2, tri, 100, 0.05, Seed{1}), Error);
}

TEST_CASE("estimate_pc is deterministic") {
  const PatternGraph c4 = parse_pattern("C4");
  const ThresholdEstimate a = estimate_pc(40, c4, 200, 0.05, Seed{12});
  const ThresholdEstimate b = estimate_pc(40, c4, 200, 0.05, Seed{12});
  CHECK(a.p_hat == b.p_hat);
  CHECK(a.trace.size() == b.trace.size());
}

TEST_CASE("least squares") {
  const double xs[] = {0, 1, 2, 3};
  const double ys[] = {1, 3, 5, 7};
  const LineFit fit = least_squares(xs, ys);
  CHECK(fit.slope == doctest::Approx(2.0));
  CHECK(fit.intercept == doctest::Approx(1.0));
  const double one[] = {1};
  CHECK_THROWS_AS(least_squares(one, one), Error);
}

TEST_CASE("scaling fit points do not depend on the rest of the list") {
  const PatternGraph tri = parse_pattern("triangle");
  const Vertex both[] = {16, 32};
  const Vertex only[] = {32};
  const Vertex more[] = {16, 32, 48};
  const ScalingFit a = scaling_fit(tri, both, 100, 0.05, Seed{2});
  CHECK(a.points.size() == 2);
  const ScalingFit b = scaling_fit(tri, more, 100, 0.05, Seed{2});
  CHECK(a.points[1].p_hat == b.points[1].p_hat);
  CHECK(a.target_slope == doctest::Approx(-1.0));
  CHECK(scaling_fit(parse_pattern("K4"), both, 50, 0.1, Seed{2}).target_slope == doctest::Approx(-2.0 / 3));
  CHECK_THROWS_AS(scaling_fit(tri, only, 100, 0.05, Seed{2}), Error);
}
