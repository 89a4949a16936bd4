#include <doctest.h>

#include "enumkit/enumerator.hpp"
#include "enumkit/errors.hpp"
#include "enumkit/flashlight.hpp"
#include "enumkit/pad.hpp"
#include "enumkit/scripted.hpp"
#include "enumkit/trace.hpp"
#include "oracles.hpp"

using namespace enumkit;

namespace {

std::unique_ptr<ScriptedEnumerator> scripted(std::vector<std::uint64_t> times,
                                             std::uint64_t n = 4) {
  return std::make_unique<ScriptedEnumerator>(schedule_from_times(times), n);
}

EnumerationTrace trace_of(std::vector<std::uint64_t> times) {
  auto e = scripted(std::move(times));
  return record_trace(*e);
}

}  // namespace

TEST_CASE("step over the empty set terminates immediately") {
  auto e = scripted({});
  StepResult r = e->step();
  CHECK(r.kind == StepKind::done);
  CHECK(e->finished());
  CHECK_THROWS_AS(e->step(), usage_error);
}

TEST_CASE("step over a singleton yields the solution then terminates") {
  ScriptedEnumerator::Schedule sched{{1, Solution("101")}};
  ScriptedEnumerator e(std::move(sched), 3);
  StepResult r1 = e.step();
  CHECK(r1.kind == StepKind::output);
  CHECK(r1.solution.payload() == "101");
  StepResult r2 = e.step();
  CHECK(r2.kind == StepKind::done);
}

TEST_CASE("flashlight on x1 and x2 yields exactly the all-ones assignment") {
  CnfFormula f;
  f.n_vars = 2;
  f.clauses = {{1}, {2}};
  auto expected = oracles::sat_brute_force(f);  // brute force over 4 assignments
  REQUIRE(expected.size() == 1);
  CHECK(expected[0].payload() == "11");

  auto e = flashlight_allsat(f);
  std::vector<Solution> got;
  while (!e->finished()) {
    StepResult r = e->step();
    if (r.kind == StepKind::output) got.push_back(r.solution);
  }
  CHECK(got == expected);
}

TEST_CASE("record_trace captures output times and budget truncation") {
  SUBCASE("empty set") {
    EnumerationTrace t = trace_of({});
    CHECK(t.output_times.empty());
    CHECK(t.total_steps <= 2);
    CHECK_FALSE(t.truncated);
  }
  SUBCASE("scripted times 3,5,9") {
    EnumerationTrace t = trace_of({3, 5, 9});
    CHECK(t.output_times == std::vector<std::uint64_t>{3, 5, 9});
    CHECK(t.solutions.size() == 3);
    CHECK_FALSE(t.truncated);
  }
  SUBCASE("budget exhaustion flags truncation") {
    auto e = scripted({3, 5, 9});
    EnumerationTrace t = record_trace(*e, 4);
    CHECK(t.truncated);
    CHECK(t.output_times == std::vector<std::uint64_t>{3});
  }
  SUBCASE("padded instance on a satisfiable 2-variable formula") {
    CnfFormula f;
    f.n_vars = 2;
    f.clauses = {{1}, {2}};
    const auto sat = oracles::sat_brute_force(f).size();
    auto e = pad_enumerator(PaddedInstance(f, 1, 2));
    EnumerationTrace t = record_trace(*e);
    // ceil(2^(2*1/2)) - 1 padding integers plus each model duplicated 2^2 times
    CHECK(t.size() == (2 - 1) + sat * 4);
    CHECK(t.size() == 5);
  }
}

TEST_CASE("traces are strictly monotone and cost-conserving") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Rng rng(seed);
    std::vector<std::uint64_t> times;
    std::uint64_t t = 0;
    std::uint64_t count = 1 + rng.next_below(30);
    for (std::uint64_t i = 0; i < count; ++i) times.push_back(t += 1 + rng.next_below(12));
    EnumerationTrace tr = trace_of(times);
    for (std::size_t i = 1; i < tr.output_times.size(); ++i)
      CHECK(tr.output_times[i - 1] < tr.output_times[i]);
    // independent recount of the total charge
    auto e = scripted(times);
    std::uint64_t recount = 0;
    while (!e->finished()) recount += e->step().charge;
    CHECK(recount == tr.total_steps);
  }
}

TEST_CASE("snapshot and resume reproduce the suffix") {
  SUBCASE("snapshot at index zero replays the whole trace") {
    auto e = scripted({2, 4, 7});
    Snapshot s = take_snapshot(*e);
    CHECK(s.index() == 0);
    EnumerationTrace full = record_trace(*e);
    auto r = s.resume();
    EnumerationTrace replay = record_trace(*r);
    CHECK(replay.output_times == full.output_times);
    CHECK(replay.solutions == full.solutions);
  }
  SUBCASE("snapshot after the second output yields the remaining suffix") {
    auto e = scripted({2, 4, 7, 11});
    std::vector<Solution> all;
    while (e->outputs_emitted() < 2) {
      StepResult r = e->step();
      if (r.kind == StepKind::output) all.push_back(r.solution);
    }
    Snapshot s = take_snapshot(*e);
    CHECK(s.index() == 2);
    EnumerationTrace rest = record_trace(*e);
    auto resumed = s.resume();
    EnumerationTrace replay = record_trace(*resumed);
    CHECK(replay.solutions == rest.solutions);
  }
  SUBCASE("allsat snapshot splits the solution set") {
    CnfFormula f = oracles::random_cnf(11, 5, 4);
    auto expected = oracles::sat_brute_force(f);
    auto e = flashlight_allsat(f);
    std::vector<Solution> prefix;
    std::uint64_t steps = 0;
    while (!e->finished() && steps < 17) {
      StepResult r = e->step();
      ++steps;
      if (r.kind == StepKind::output) prefix.push_back(r.solution);
    }
    Snapshot s = take_snapshot(*e);
    auto resumed = s.resume();
    EnumerationTrace suffix = record_trace(*resumed);
    std::vector<Solution> all = prefix;
    all.insert(all.end(), suffix.solutions.begin(), suffix.solutions.end());
    CHECK(oracles::sorted(all) == expected);
  }
  SUBCASE("non-snapshottable enumerators refuse") {
    class Opaque : public StepwiseEnumerator {
     public:
      std::uint64_t state_size_bits() const override { return 64; }
      std::uint64_t solution_bound_bits() const override { return 2; }
      std::uint64_t instance_size() const override { return 1; }

     protected:
      StepResult advance() override { return StepResult{StepKind::done, Solution(), 1, false}; }
    };
    Opaque e;
    CHECK_THROWS_AS(take_snapshot(e), capability_error);
  }
}

TEST_CASE("snapshot determinism across every split point") {
  std::vector<std::uint64_t> times{1, 2, 9, 10, 11, 40, 41};
  EnumerationTrace full = trace_of(times);
  for (std::uint64_t cut = 0; cut <= times.size(); ++cut) {
    auto e = scripted(times);
    while (e->outputs_emitted() < cut && !e->finished()) e->step();
    Snapshot s = take_snapshot(*e);
    auto resumed = s.resume();
    EnumerationTrace suffix = record_trace(*resumed);
    REQUIRE(suffix.solutions.size() == full.solutions.size() - cut);
    for (std::size_t i = 0; i < suffix.solutions.size(); ++i)
      CHECK(suffix.solutions[i] == full.solutions[cut + i]);
  }
}

TEST_CASE("detect_gaps matches the definition") {
  SUBCASE("no gaps under a generous threshold") {
    CHECK(detect_gaps(trace_of({1, 2, 3}), 5).empty());
  }
  SUBCASE("a single oversized interval is reported by index") {
    auto gaps = detect_gaps(trace_of({1, 2, 100}), 34);
    CHECK(gaps == std::vector<std::uint64_t>{2});
  }
  SUBCASE("threshold equal to the max delay yields nothing (strict inequality)") {
    EnumerationTrace t = trace_of({1, 2, 100});
    CHECK(detect_gaps(t, t.max_delay()).empty());
  }
  SUBCASE("pre-first-output interval counts as index zero") {
    auto gaps = detect_gaps(trace_of({50, 51}), 10);
    CHECK(gaps == std::vector<std::uint64_t>{0});
  }
  SUBCASE("agrees with the brute-force recount on random traces") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
      Rng rng(seed);
      std::vector<std::uint64_t> times;
      std::uint64_t t = 0;
      for (std::uint64_t i = 0; i < 25; ++i) times.push_back(t += 1 + rng.next_below(40));
      EnumerationTrace tr = trace_of(times);
      for (std::uint64_t p : {1ULL, 5ULL, 17ULL, 39ULL})
        CHECK(detect_gaps(tr, p) == oracles::gaps_by_definition(tr, p));
    }
  }
}

TEST_CASE("check_incremental fits and rejects constants") {
  SUBCASE("linear times fit a=1 with c=1") {
    std::vector<std::uint64_t> times;
    for (std::uint64_t i = 1; i <= 12; ++i) times.push_back(i);
    EnumerationTrace t = trace_of(times);
    CHECK(tightest_constant(t, 1, 0, 4) == doctest::Approx(1.0));
    IncrementalFit fit = check_incremental(t, 1, 4, 1.0, 0);
    CHECK(fit.ok);
    CHECK(fit.c == doctest::Approx(1.0));
  }
  SUBCASE("cubic times fit a=3 exactly and violate a=1 at m=2 for c<4") {
    EnumerationTrace t = trace_of({1, 8, 27});
    CHECK(tightest_constant(t, 3, 0, 4) == doctest::Approx(1.0));
    CHECK(tightest_constant(t, 1, 0, 4) == doctest::Approx(9.0));
    IncrementalFit fit = check_incremental(t, 1, 4, 3.9, 0);
    CHECK_FALSE(fit.ok);
    REQUIRE(fit.violation_m.has_value());
    CHECK(*fit.violation_m == 2);
  }
  SUBCASE("truncated traces are rejected") {
    auto e = scripted({3, 5, 9});
    EnumerationTrace t = record_trace(*e, 4);
    CHECK_THROWS_AS(check_incremental(t, 1, 4, 1.0, 0), usage_error);
  }
}

TEST_CASE("trace csv carries the json header and rows") {
  EnumerationTrace t = trace_of({3, 5});
  std::string csv = trace_to_csv(t);
  CHECK(csv.find("# {\"instance\"") == 0);
  CHECK(csv.find("index,cumulative_steps,solution_hex\n") != std::string::npos);
  CHECK(csv.find("1,3,") != std::string::npos);
  CHECK(csv.find("2,5,") != std::string::npos);
  CHECK(trace_to_csv(t) == csv);  // stable bytes
}

TEST_CASE("precomputation fence is enforced and excluded from gap zero") {
  class Fenced : public ScriptedEnumerator {
   public:
    using ScriptedEnumerator::ScriptedEnumerator;

   protected:
    StepResult advance() override {
      StepResult r = ScriptedEnumerator::advance();
      if (!fence_done_) {
        fence_done_ = true;
        r.precomputation_done = true;
      }
      return r;
    }

   private:
    bool fence_done_ = false;
  };
  // outputs at 40,41 with the first 1 step declared precomputation
  Fenced e(schedule_from_times({40, 41}), 4);
  EnumerationTrace t = record_trace(e);
  CHECK(t.precomputation_steps == 1);
  CHECK(t.delay_before(0) == 39);
}
