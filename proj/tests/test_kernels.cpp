#include <doctest.h>

#include "ffree/adversary.hpp"
#include "ffree/error.hpp"
#include "ffree/kernels.hpp"
#include "ffree/subiso.hpp"

using namespace ffree;

namespace {

struct WorkerGuard {
  ~WorkerGuard() { kernels::set_workers(0); }
};

bool same(const TrialRecord& a, const TrialRecord& b) {
  if (a.hits.size() != b.hits.size()) return false;
  for (std::size_t i = 0; i < a.hits.size(); ++i) {
    const HitRecord& x = a.hits[i];
    const HitRecord& y = b.hits[i];
    if (x.h_index != y.h_index || x.e_h != y.e_h || x.shared_raw != y.shared_raw ||
        x.event_e != y.event_e || x.touched_copies != y.touched_copies || x.event_d != y.event_d ||
        x.shared_altered != y.shared_altered)
      return false;
  }
  return a.seed == b.seed && a.trial_index == b.trial_index && a.n == b.n && a.p == b.p &&
         a.in_regime == b.in_regime && a.hit_all == b.hit_all && a.missed_weight == b.missed_weight &&
         a.sampled_edges == b.sampled_edges && a.packed_copies == b.packed_copies &&
         a.identity_ok == b.identity_ok;
}

}  // namespace

TEST_CASE("battery streams are distinct and reproducible") {
  const auto a = kernels::Battery::make(20, Seed{1}, 50);
  const auto b = kernels::Battery::make(20, Seed{1}, 50);
  CHECK(a.size() == 50);
  for (std::size_t i = 0; i < a.keys.size(); ++i) {
    CHECK(a.keys[i] == b.keys[i]);
    if (i > 0) CHECK_FALSE(a.keys[i] == a.keys[i - 1]);
  }
}

TEST_CASE("count_free: serial and parallel agree") {
  WorkerGuard guard;
  const PatternGraph tri = parse_pattern("triangle");
  const auto battery = kernels::Battery::make(24, Seed{4}, 300);
  std::uint64_t brute = 0;
  for (const StreamKey key : battery.keys) brute += contains_copy(coupled_realize(24, key, 0.12), tri) ? 0 : 1;
  for (int workers : {1, 2, 3, 8}) {
    kernels::set_workers(workers);
    for (double p : {0.0, 0.05, 0.12, 0.3, 1.0}) {
      CHECK(kernels::count_free_serial(battery, p, tri) == kernels::count_free_parallel(battery, p, tri));
    }
    CHECK(kernels::count_free_parallel(battery, 0.12, tri) == brute);
  }
  CHECK_THROWS_AS(kernels::count_free_parallel(battery, 1.5, tri), Error);
}

TEST_CASE("run_trials: serial and parallel agree record by record") {
  WorkerGuard guard;
  const PatternGraph c4 = parse_pattern("C4");
  const AlterationExperiment exp(c4, 36, 0.1);
  const WeightedFamily fam = clique_union_family(36, 3, 6, Seed{2});
  const auto serial = kernels::run_trials_serial(exp, fam, Seed{6}, 5, 40);
  for (int workers : {1, 2, 5}) {
    kernels::set_workers(workers);
    const auto parallel = kernels::run_trials_parallel(exp, fam, Seed{6}, 5, 40);
    REQUIRE(parallel.size() == serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].trial_index == 5 + i);
      CHECK(same(serial[i], parallel[i]));
    }
  }
  CHECK_THROWS_AS(kernels::run_trials_parallel(exp, WeightedFamily::unit({LabeledGraph(10)}), Seed{6}, 0, 4),
                  Error);
}

TEST_CASE("binomial counts: serial and parallel agree") {
  WorkerGuard guard;
  const auto serial = kernels::count_binomial_at_most_serial(Seed{8}, 5000, 200, 0.1, 10);
  for (int workers : {1, 2, 7}) {
    kernels::set_workers(workers);
    CHECK(kernels::count_binomial_at_most_parallel(Seed{8}, 5000, 200, 0.1, 10) == serial);
  }
  CHECK_THROWS_AS(kernels::count_binomial_at_most_parallel(Seed{8}, 10, 200, -0.1, 10), Error);
}
