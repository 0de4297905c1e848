#include <doctest.h>

#include <cmath>

#include "ffree/error.hpp"
#include "ffree/kernels.hpp"
#include "ffree/sampling.hpp"

using namespace ffree;

TEST_CASE("seed parsing") {
  CHECK(parse_seed("42").master == 42);
  CHECK(parse_seed("0x2A").master == 42);
  CHECK(parse_seed("0xffffffffffffffff").master == ~std::uint64_t{0});
  CHECK_THROWS_AS(parse_seed(""), Error);
  CHECK_THROWS_AS(parse_seed("12a"), Error);
  CHECK_THROWS_AS(parse_seed("0x"), Error);
  CHECK_THROWS_AS(parse_seed("-1"), Error);
  CHECK_THROWS_AS(parse_seed("18446744073709551616"), Error);
}

TEST_CASE("gnp edge cases") {
  CHECK(sample_gnp(5, 0.0, Seed{9}) == LabeledGraph(5));
  CHECK(sample_gnp(5, 1.0, Seed{9}) == LabeledGraph::complete(5));
  CHECK(sample_gnp(100, 0.5, Seed{17}) == sample_gnp(100, 0.5, Seed{17}));
  CHECK_FALSE(sample_gnp(100, 0.5, Seed{17}) == sample_gnp(100, 0.5, Seed{18}));
  CHECK_FALSE(sample_gnp(100, 0.5, Seed{17}, 0) == sample_gnp(100, 0.5, Seed{17}, 1));
  CHECK_THROWS_AS(sample_gnp(5, 1.5, Seed{1}), Error);
  CHECK_THROWS_AS(sample_gnp(5, -0.1, Seed{1}), Error);
  CHECK_THROWS_AS(sample_gnp(5, std::nan(""), Seed{1}), Error);
}

TEST_CASE("gnp output is pinned") {
  const LabeledGraph g = sample_gnp(8, 0.5, Seed{1});
  const LabeledGraph again = coupled_realize(EdgeThresholdTable(8, derive_stream(Seed{1}, Purpose::gnp, 0)), 0.5);
  CHECK(g == again);
  // Reference splitmix64 sequence for state 0.
  CHECK(mix64(0) == 0);
  CHECK(stream_bits(StreamKey{0}, 0) == 0xE220A8397B1DCDAFull);
  CHECK(stream_bits(StreamKey{0}, 1) == 0x6E789E6AA1B965F4ull);
  CHECK(stream_bits(StreamKey{0}, 2) == 0x06C45D188009454Full);
}

TEST_CASE("table realization is monotone in p") {
  const EdgeThresholdTable table(40, derive_stream(Seed{5}, Purpose::battery, 3));
  CHECK(coupled_realize(table, 0.0) == LabeledGraph(40));
  CHECK(coupled_realize(table, 1.0) == LabeledGraph::complete(40));
  LabeledGraph prev = coupled_realize(table, 0.0);
  for (int k = 1; k <= 40; ++k) {
    const double p = k / 40.0;
    const LabeledGraph next = coupled_realize(table, p);
    CHECK(prev.is_subgraph_of(next));
    CHECK(next == coupled_realize(40, derive_stream(Seed{5}, Purpose::battery, 3), p));
    prev = next;
  }
}

TEST_CASE("fixed cutoff grid") {
  CHECK(fixed_cutoff(0.0).cutoff == 0);
  CHECK_FALSE(fixed_cutoff(0.0).admits(0));
  CHECK(fixed_cutoff(1.0).all);
  CHECK(fixed_cutoff(1.0).admits(~std::uint64_t{0}));
  CHECK(fixed_cutoff(0.5).cutoff == (std::uint64_t{1} << 63));
  CHECK(fixed_cutoff(0.25).cutoff == (std::uint64_t{1} << 62));
}

TEST_CASE("mean edge count at n=50, p=0.2") {
  const Vertex n = 50;
  const double p = 0.2;
  const std::uint64_t samples = 10000;
  double sum = 0.0;
  for (std::uint64_t t = 0; t < samples; ++t) sum += static_cast<double>(sample_gnp(n, p, Seed{11}, t).edge_count());
  const double pairs = static_cast<double>(pair_count(n));
  const double mean = sum / static_cast<double>(samples);
  const double se = std::sqrt(pairs * p * (1 - p) / static_cast<double>(samples));
  CHECK(std::abs(mean - p * pairs) <= 3 * se);
}

TEST_CASE("chernoff bound formula") {
  CHECK(chernoff_tail_bound(0, 0.3) == 1.0);
  CHECK(chernoff_tail_bound(80, 0.1) == doctest::Approx(std::exp(-1.0)));
  CHECK(chernoff_tail_bound(200, 0.1) == doctest::Approx(std::exp(-2.5)));
}

TEST_CASE("binomial sampler mean and variance") {
  const std::uint64_t draws = 20000;
  double sum = 0.0, sq = 0.0;
  for (std::uint64_t i = 0; i < draws; ++i) {
    const double x = static_cast<double>(sample_binomial(derive_stream(Seed{2}, Purpose::binomial, i), 0, 50, 0.3));
    sum += x;
    sq += x * x;
  }
  const double mean = sum / draws;
  const double var = sq / draws - mean * mean;
  CHECK(std::abs(mean - 15.0) <= 3 * std::sqrt(10.5 / draws));
  CHECK(var == doctest::Approx(10.5).epsilon(0.05));
}

TEST_CASE("lower tail never exceeds the chernoff bound") {
  struct Case {
    std::uint64_t n;
    double p;
  };
  for (const Case c : {Case{100, 0.1}, Case{200, 0.1}, Case{400, 0.05}}) {
    const std::uint64_t draws = 100000;
    const double half = static_cast<double>(c.n) * c.p / 2.0;
    const std::uint64_t hits = kernels::count_binomial_at_most_parallel(Seed{77}, draws, c.n, c.p, half);
    const double freq = static_cast<double>(hits) / draws;
    const double bound = chernoff_tail_bound(c.n, c.p);
    const double se = std::sqrt(bound * (1 - bound) / draws);
    CAPTURE(c.n);
    CHECK(freq <= bound + 3 * se);
  }
}
