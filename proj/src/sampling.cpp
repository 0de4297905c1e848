#include "ffree/sampling.hpp"

#include <charconv>
#include <cmath>

#include "ffree/error.hpp"

namespace ffree {

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Seed parse_seed(std::string_view text) {
  int base = 10;
  if (text.starts_with("0x") || text.starts_with("0X")) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::parameter, "malformed seed '" + std::string(text) + "'");
  }
  return Seed{value};
}

StreamKey derive_stream(Seed seed, Purpose purpose, std::uint64_t index) noexcept {
  const std::uint64_t tagged = mix64(seed.master ^ mix64(static_cast<std::uint64_t>(purpose)));
  return StreamKey{mix64(tagged + mix64(index + 0x632BE59BD9B4E019ull))};
}

Seed derive_seed(Seed seed, Purpose purpose, std::uint64_t index) noexcept {
  return Seed{derive_stream(seed, purpose, index).value};
}

FixedCutoff fixed_cutoff(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::parameter, "probability " + std::to_string(p) + " outside [0,1]");
  }
  if (p == 1.0) return {0, true};
  // p < 1 has at most 53 significant bits, so p * 2^64 < 2^64 is exact.
  return {static_cast<std::uint64_t>(std::ldexp(p, 64)), false};
}

EdgeThresholdTable::EdgeThresholdTable(Vertex n, StreamKey key)
    : n_(n), marks_(pair_count(n)) {
  for (std::uint64_t e = 0; e < marks_.size(); ++e) marks_[e] = stream_bits(key, e);
}

LabeledGraph coupled_realize(const EdgeThresholdTable& table, double p) {
  const FixedCutoff cut = fixed_cutoff(p);
  LabeledGraph g(table.n());
  const auto& marks = table.marks();
  for (std::uint64_t e = 0; e < marks.size(); ++e) {
    if (cut.admits(marks[e])) g.set_edge(EdgeId{e});
  }
  return g;
}

LabeledGraph coupled_realize(Vertex n, StreamKey key, double p) {
  const FixedCutoff cut = fixed_cutoff(p);
  if (cut.all) return LabeledGraph::complete(n);
  LabeledGraph g(n);
  if (cut.cutoff == 0) return g;
  auto words = g.mutable_words();
  const std::uint64_t total = pair_count(n);
  for (std::uint64_t e = 0; e < total; ++e) {
    if (stream_bits(key, e) < cut.cutoff) words[e >> 6] |= std::uint64_t{1} << (e & 63);
  }
  return g;
}

LabeledGraph sample_gnp(Vertex n, double p, Seed seed, std::uint64_t trial) {
  if (n == 0) throw Error(Errc::parameter, "sample_gnp needs n >= 1");
  return coupled_realize(n, derive_stream(seed, Purpose::gnp, trial), p);
}

std::uint64_t sample_binomial(StreamKey key, std::uint64_t first_counter,
                              std::uint64_t trials, double p) {
  const FixedCutoff cut = fixed_cutoff(p);
  std::uint64_t successes = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    if (cut.admits(stream_bits(key, first_counter + i))) ++successes;
  }
  return successes;
}

double chernoff_tail_bound(std::uint64_t n_trials, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(Errc::parameter, "probability " + std::to_string(p) + " outside [0,1]");
  }
  return std::exp(-static_cast<double>(n_trials) * p / 8.0);
}

}  // namespace ffree
