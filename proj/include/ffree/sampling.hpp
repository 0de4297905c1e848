#pragma once

// Reproducible randomness for G(n,p).
//
// Every random quantity is a pure function of (master seed, purpose, index,
// counter): the splitmix64 output function applied to a key-offset counter.
// Trials therefore need no shared generator state and can run in any order.
//
// Edge marks are 64-bit fixed-point fractions u in [0, 1). An edge is present
// at probability p iff u < p, with p rounded down to the same 2^-64 grid and
// p = 1 treated as "every edge". For a fixed stream the edge sets are nested
// in p.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ffree/graph.hpp"

namespace ffree {

enum class Purpose : std::uint64_t {
  gnp = 1,
  battery = 2,
  family = 3,
  trial = 4,
  binomial = 5,
  scaling = 6,
};

struct Seed {
  std::uint64_t master = 0;
  friend bool operator==(const Seed&, const Seed&) = default;
};

/// Accepts decimal or 0x-prefixed hexadecimal. Throws Errc::parameter.
Seed parse_seed(std::string_view text);

struct StreamKey {
  std::uint64_t value = 0;
  friend bool operator==(const StreamKey&, const StreamKey&) = default;
};

std::uint64_t mix64(std::uint64_t z) noexcept;

StreamKey derive_stream(Seed seed, Purpose purpose, std::uint64_t index) noexcept;

/// A seed for a nested experiment (e.g. one n of a scaling sweep).
Seed derive_seed(Seed seed, Purpose purpose, std::uint64_t index) noexcept;

inline std::uint64_t stream_bits(StreamKey key, std::uint64_t counter) noexcept {
  return mix64(key.value + (counter + 1) * 0x9E3779B97F4A7C15ull);
}

/// Uniform double in [0,1) with 53 random bits.
inline double stream_uniform(StreamKey key, std::uint64_t counter) noexcept {
  return static_cast<double>(stream_bits(key, counter) >> 11) * 0x1.0p-53;
}

/// p on the 2^-64 grid. Marks below the cutoff are present; `all` covers p >= 1.
struct FixedCutoff {
  std::uint64_t cutoff = 0;
  bool all = false;

  bool admits(std::uint64_t mark) const noexcept { return all || mark < cutoff; }
};

/// Throws Errc::parameter for p outside [0, 1].
FixedCutoff fixed_cutoff(double p);

class EdgeThresholdTable {
 public:
  EdgeThresholdTable(Vertex n, StreamKey key);

  Vertex n() const noexcept { return n_; }
  std::uint64_t mark(EdgeId id) const { return marks_[id.index]; }
  const std::vector<std::uint64_t>& marks() const noexcept { return marks_; }

 private:
  Vertex n_;
  std::vector<std::uint64_t> marks_;
};

/// Edge e present iff table.mark(e) < p.
LabeledGraph coupled_realize(const EdgeThresholdTable& table, double p);

/// Same as coupled_realize on EdgeThresholdTable(n, key), without storing marks.
LabeledGraph coupled_realize(Vertex n, StreamKey key, double p);

/// One G(n,p) sample; equals coupled_realize(n, derive_stream(seed, gnp, trial), p).
LabeledGraph sample_gnp(Vertex n, double p, Seed seed, std::uint64_t trial = 0);

/// Bin(trials, p) from one stream: counts marks below p among `trials` draws
/// starting at `first_counter`.
std::uint64_t sample_binomial(StreamKey key, std::uint64_t first_counter,
                              std::uint64_t trials, double p);

/// exp(-N p / 8): the Chernoff upper bound on Pr(Bin(N,p) <= Np/2).
double chernoff_tail_bound(std::uint64_t n_trials, double p);

}  // namespace ffree
