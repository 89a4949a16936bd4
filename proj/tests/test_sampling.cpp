#include <doctest.h>

#include <cmath>
#include <set>

#include "enumkit/errors.hpp"
#include "enumkit/explicit_set.hpp"
#include "enumkit/sample_enumerate.hpp"
#include "enumkit/trace.hpp"
#include "enumkit/trials.hpp"
#include "oracles.hpp"

using namespace enumkit;

namespace {

SamplingConfig cfg_of(double eps, std::uint64_t p_bits, std::uint64_t seed) {
  SamplingConfig cfg;
  cfg.epsilon = eps;
  cfg.p_bits = p_bits;
  cfg.seed = seed;
  return cfg;
}

// deliberately broken generator used for the contract check
class RogueGenerator : public SolutionGenerator {
 public:
  Draw draw() override { return {Solution("###"), 1}; }
  std::optional<bool> check_member(const Solution&) const override { return false; }
  std::uint64_t state_size_bits() const override { return 64; }
  std::uint64_t instance_size() const override { return 1; }
  std::uint64_t solution_bound_bits() const override { return 6; }
};

}  // namespace

TEST_CASE("stop multipliers match the stated formulas") {
  CHECK(sampling_stop_multiplier(cfg_of(0.5, 8, 1), 1.0) == 20);
  CHECK(sampling_stop_multiplier(cfg_of(0.5, 8, 1), 3.0) == 60);
  CHECK(sketch_stop_multiplier(cfg_of(0.5, 8, 1)) == 44);
  CHECK_THROWS_AS(sampling_stop_multiplier(cfg_of(0.0, 8, 1), 1.0), usage_error);
  CHECK_THROWS_AS(sampling_stop_multiplier(cfg_of(1.0, 8, 1), 1.0), usage_error);
}

TEST_CASE("singleton set stops after the multiplier runs dry") {
  auto set = make_counter_set(1);
  auto e = sample_enumerate(explicit_generator(set, 5), cfg_of(0.5, 8, 5));
  EnumerationTrace t = record_trace(*e);
  CHECK(t.size() == 1);
  CHECK(e->draws() == e->stop_multiplier() + 1);  // r climbs to K*|E| then one more check
  CHECK(e->distinct_found() == 1);
}

TEST_CASE("emissions are duplicate free across seeded runs") {
  auto set = make_counter_set(12);
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto e = sample_enumerate(explicit_generator(set, seed), cfg_of(0.3, 8, seed));
    EnumerationTrace t = record_trace(*e);
    auto sorted = oracles::sorted(t.solutions);
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
}

TEST_CASE("stopping decisions replay the literal rule") {
  auto set = make_counter_set(6);
  auto gen = explicit_generator(set, 77);
  SampleEnumerator e(std::move(gen), cfg_of(0.4, 6, 77),
                     sampling_stop_multiplier(cfg_of(0.4, 6, 77), 1.0));
  e.enable_decision_log();
  while (!e.finished()) e.step();
  REQUIRE(!e.decision_log().empty());
  for (const auto& d : e.decision_log())
    CHECK(d.continued == (d.r <= e.stop_multiplier() * d.e_size));
  CHECK_FALSE(e.decision_log().back().continued);
}

TEST_CASE("emission times follow the incremental-linear shape") {
  auto set = make_counter_set(32);
  SamplingConfig cfg = cfg_of(0.2, 12, 3);
  auto e = sample_enumerate(explicit_generator(set, 3), cfg);
  const std::uint64_t K = e->stop_multiplier();
  // max per-step charge: draw + dedup walk + bookkeeping, all word-sized here
  std::uint64_t max_step = 0;
  std::vector<std::uint64_t> emission_times;
  std::uint64_t total = 0;
  while (!e->finished()) {
    StepResult r = e->step();
    total += r.charge;
    max_step = std::max(max_step, r.charge);
    if (r.kind == StepKind::output) emission_times.push_back(total);
  }
  for (std::size_t m = 0; m < emission_times.size(); ++m)
    CHECK(emission_times[m] <= (K * (m + 1) + 1) * max_step);
}

TEST_CASE("mean draws to completion tracks the coupon collector") {
  TrialPlan plan;
  plan.set = make_counter_set(4);
  plan.cfg = cfg_of(0.5, 8, 2024);
  plan.trials = 4000;
  plan.threads = 1;
  auto results = run_trials(plan);
  TrialSummary s = summarize(results);
  const double expect = oracles::coupon_collector_mean(4);  // 25/3
  CHECK(expect == doctest::Approx(25.0 / 3.0));
  CHECK(s.coverage_fraction >= 0.99);
  CHECK(std::abs(s.mean_draws_to_complete - expect) <= 0.08 * expect);
  CHECK(s.duplicate_emissions == 0);
}

TEST_CASE("biased generators cover both elements at the scaled multiplier") {
  ExplicitSet set;
  set.elements = {Solution("0"), Solution("1")};
  set.weights = {3.0, 1.0};
  std::uint64_t covered = 0;
  const int trials = 400;
  for (int t = 0; t < trials; ++t) {
    auto gen = explicit_generator(set, 1000 + static_cast<std::uint64_t>(t));
    CHECK(gen->bias_bound() == doctest::Approx(2.0));
    auto e = sample_enumerate_biased(std::move(gen), cfg_of(0.2, 2, 1));
    CHECK(e->stop_multiplier() == sampling_stop_multiplier(cfg_of(0.2, 2, 1), 2.0));
    EnumerationTrace tr = record_trace(*e);
    if (tr.size() == 2) ++covered;
  }
  const double frac = static_cast<double>(covered) / trials;
  CHECK(frac >= 1.0 - 0.2 - 3.0 * std::sqrt(0.2 * 0.8 / trials));
}

TEST_CASE("uniform front end rejects biased generators") {
  ExplicitSet set;
  set.elements = {Solution("0"), Solution("1")};
  set.weights = {3.0, 1.0};
  CHECK_THROWS_AS(sample_enumerate(explicit_generator(set, 1), cfg_of(0.5, 2, 1)),
                  usage_error);
}

TEST_CASE("non-member draws violate the generator contract") {
  auto e = sample_enumerate(std::make_unique<RogueGenerator>(), cfg_of(0.5, 6, 1));
  CHECK_THROWS_AS(record_trace(*e), contract_error);
}

TEST_CASE("sketch scheme emits repetitions and still stops") {
  auto set = make_counter_set(1);
  auto e = sample_enumerate_sketch(explicit_generator(set, 4), cfg_of(0.5, 8, 4));
  EnumerationTrace t = record_trace(*e);
  CHECK(e->draws() == e->stop_multiplier() + 1);
  CHECK(t.size() == e->draws());  // every draw emitted, repetitions included
  std::set<Solution> distinct(t.solutions.begin(), t.solutions.end());
  CHECK(distinct.size() == 1);
}

TEST_CASE("sketch scheme stores no solution set") {
  SamplingConfig cfg = cfg_of(0.1, 12, 6);
  std::uint64_t space_small = 0, space_large = 0;
  {
    auto e = sample_enumerate_sketch(explicit_generator(make_counter_set(16), 6), cfg);
    while (!e->finished()) e->step();
    space_small = e->non_generator_space_bits();
  }
  {
    auto e = sample_enumerate_sketch(explicit_generator(make_counter_set(1024), 6), cfg);
    while (!e->finished()) e->step();
    space_large = e->non_generator_space_bits();
  }
  // identical parameter budget regardless of the set size
  CHECK(space_large <= space_small + 64);

  std::uint64_t trie_small = 0, trie_large = 0;
  {
    auto e = sample_enumerate(explicit_generator(make_counter_set(16), 6), cfg);
    while (!e->finished()) e->step();
    trie_small = e->dedup_space_bits();
  }
  {
    auto e = sample_enumerate(explicit_generator(make_counter_set(1024), 6), cfg);
    while (!e->finished()) e->step();
    trie_large = e->dedup_space_bits();
  }
  CHECK(trie_large >= 16 * trie_small);  // dedup memory scales with the set
}

TEST_CASE("trial results are independent of the thread count") {
  TrialPlan plan;
  plan.set = make_counter_set(16);
  plan.cfg = cfg_of(0.2, 8, 99);
  plan.trials = 64;
  plan.threads = 1;
  auto serial = run_trials(plan);
  plan.threads = 2;
  auto parallel = run_trials(plan);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].seed == parallel[i].seed);
    CHECK(serial[i].draws == parallel[i].draws);
    CHECK(serial[i].covered == parallel[i].covered);
    CHECK(serial[i].draws_to_complete == parallel[i].draws_to_complete);
  }
}
