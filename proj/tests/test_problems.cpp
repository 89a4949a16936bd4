#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <map>

#include "enumkit/cnf.hpp"
#include "enumkit/errors.hpp"
#include "enumkit/explicit_set.hpp"
#include "enumkit/flashlight.hpp"
#include "enumkit/pad.hpp"
#include "enumkit/trace.hpp"
#include "oracles.hpp"

using namespace enumkit;

TEST_CASE("dimacs parsing") {
  SUBCASE("minimal instance") {
    CnfFormula f = parse_dimacs("p cnf 2 1\n1 2 0");
    CHECK(f.n_vars == 2);
    REQUIRE(f.clauses.size() == 1);
    CHECK(f.clauses[0] == std::vector<int>{1, 2});
  }
  SUBCASE("unit clauses pin the satisfying assignment") {
    CnfFormula f = parse_dimacs("p cnf 2 2\n1 0\n2 0");
    auto sat = oracles::sat_brute_force(f);
    REQUIRE(sat.size() == 1);
    CHECK(sat[0].payload() == "11");
  }
  SUBCASE("empty clause makes the formula unsatisfiable") {
    CnfFormula f = parse_dimacs("p cnf 1 1\n0\n");
    CHECK(oracles::sat_brute_force(f).empty());
  }
  SUBCASE("comments and multi-line clauses") {
    CnfFormula f = parse_dimacs("c header comment\np cnf 3 2\nc mid comment\n1 -2\n3 0\n-1 0\n");
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0] == std::vector<int>{1, -2, 3});
  }
  SUBCASE("errors carry line numbers") {
    CHECK_THROWS_AS(parse_dimacs("p cnf x 1\n1 0"), parse_error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0"), parse_error);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n1 2"), parse_error);
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), parse_error);
    try {
      parse_dimacs("p cnf 2 1\n9 0");
    } catch (const parse_error& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("parse emit parse is the identity on the structure") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      CnfFormula f = oracles::random_cnf(seed, 1 + seed % 9, 1 + seed % 7);
      CnfFormula g = parse_dimacs(emit_dimacs(f));
      CHECK(g.n_vars == f.n_vars);
      CHECK(g.clauses == f.clauses);
    }
  }
}

TEST_CASE("flashlight enumerates satisfying assignments in lexicographic order") {
  SUBCASE("unsatisfiable formula terminates after the root oracle call") {
    CnfFormula f = parse_dimacs("p cnf 2 2\n1 0\n-1 0\n");
    auto e = flashlight_allsat(f);
    StepResult r = e->step();
    CHECK(r.kind == StepKind::done);
  }
  SUBCASE("tautology over three variables yields the full cube in order") {
    CnfFormula f;
    f.n_vars = 3;
    auto e = flashlight_allsat(f);
    EnumerationTrace t = record_trace(*e);
    REQUIRE(t.size() == 8);
    for (std::uint64_t v = 0; v < 8; ++v)
      CHECK(t.solutions[v] == Solution::from_value(v, 3));
  }
  SUBCASE("matches brute force on a random corpus") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      CnfFormula f = oracles::random_cnf(seed, 2 + seed % 7, 1 + seed % 8);
      auto expected = oracles::sat_brute_force(f);
      auto e = flashlight_allsat(f);
      EnumerationTrace t = record_trace(*e);
      CHECK(t.solutions == expected);  // lex order and no duplicates
    }
  }
  SUBCASE("unit-charge oracle keeps the delay linear in n") {
    for (int n : {4, 6, 8, 10}) {
      CnfFormula f = oracles::random_cnf(77 + static_cast<std::uint64_t>(n), n, n);
      auto e = flashlight_allsat(f);
      EnumerationTrace t = record_trace(*e);
      if (t.size() < 2) continue;
      CHECK(t.max_delay(false) <= 8 * static_cast<std::uint64_t>(n) + 8);
    }
  }
  SUBCASE("an inconsistent oracle is caught") {
    class LyingOracle : public ExtensionOracle {
     public:
      Answer query(const CnfFormula&, const std::vector<std::uint8_t>&) override {
        return {true, 1};  // everything extendable, even unsatisfiable leaves
      }
    };
    CnfFormula f = parse_dimacs("p cnf 2 2\n1 0\n-1 0\n");
    auto e = flashlight_allsat(f, std::make_shared<LyingOracle>());
    CHECK_THROWS_AS(record_trace(*e), contract_error);
  }
}

TEST_CASE("exact rational power of two") {
  CHECK(ceil_pow2_rational(8, 2) == 16);    // 2^4
  CHECK(ceil_pow2_rational(1, 2) == 2);     // ceil(sqrt 2)
  CHECK(ceil_pow2_rational(8, 3) == 7);     // ceil(2^(8/3)) = ceil(6.349...)
  CHECK(ceil_pow2_rational(0, 3) == 1);
  CHECK(ceil_pow2_rational(26, 1) == (1ULL << 26));
  for (std::uint64_t e = 1; e <= 40; ++e)
    for (std::uint64_t q = 1; q <= 5; ++q) {
      std::uint64_t m = ceil_pow2_rational(e, q);
      // m is the least integer with m^q >= 2^e
      auto pw = [&](std::uint64_t x) {
        __uint128_t acc = 1;
        for (std::uint64_t i = 0; i < q; ++i) acc *= x;
        return acc;
      };
      CHECK(pw(m) >= (static_cast<__uint128_t>(1) << e));
      if (m > 1) CHECK(pw(m - 1) < (static_cast<__uint128_t>(1) << e));
    }
}

TEST_CASE("padded instance cardinality and shape") {
  SUBCASE("satisfiable two-variable formula at t = 1/2") {
    CnfFormula f = parse_dimacs("p cnf 2 2\n1 0\n2 0\n");
    PaddedInstance inst(f, 1, 2);
    CHECK(inst.padding_count() == 1);
    auto e = pad_enumerator(inst);
    EnumerationTrace t = record_trace(*e);
    CHECK(t.size() == 1 + 1 * 4);
  }
  SUBCASE("unsatisfiable formula emits exactly the padding") {
    CnfFormula f = parse_dimacs("p cnf 3 2\n1 0\n-1 0\n");
    auto sat = oracles::sat_brute_force(f);
    REQUIRE(sat.empty());
    PaddedInstance inst(f, 1, 1);
    CHECK(inst.padding_count() == 7);
    auto e = pad_enumerator(inst);
    EnumerationTrace t = record_trace(*e);
    CHECK(t.size() == 7);
  }
  SUBCASE("four variables with two models at t = 1/2") {
    // forces x1=1, x2=1, x3=1 and leaves x4 free: exactly two models
    CnfFormula f = parse_dimacs("p cnf 4 3\n1 0\n2 0\n3 0\n");
    REQUIRE(oracles::sat_brute_force(f).size() == 2);
    PaddedInstance inst(f, 1, 2);
    auto e = pad_enumerator(inst);
    EnumerationTrace t = record_trace(*e);
    CHECK(t.size() == (4 - 1) + 2 * 16);
    CHECK(t.size() == 35);
    IncrementalFit fit = check_incremental(t, 2, 4, 64.0, 0);
    CHECK(fit.ok);
  }
  SUBCASE("padding tags keep the solution set duplicate free") {
    CnfFormula f = parse_dimacs("p cnf 2 1\n1 0\n");
    PaddedInstance inst(f, 1, 1);
    auto e = pad_enumerator(inst);
    EnumerationTrace t = record_trace(*e);
    auto sorted = oracles::sorted(t.solutions);
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
  }
  SUBCASE("oversized padding is rejected") {
    CnfFormula f;
    f.n_vars = 20;
    CHECK_THROWS_AS(PaddedInstance(f, 2, 1), usage_error);        // t > 1
    CHECK_THROWS_AS(PaddedInstance(f, 0, 1), usage_error);        // t = 0
    CnfFormula big;
    big.n_vars = 40;
    CHECK_THROWS_AS(PaddedInstance(big, 1, 1), instance_too_large_error);
  }
}

TEST_CASE("explicit sets and generators") {
  SUBCASE("singleton generator always returns its element") {
    ExplicitSet set;
    set.elements = {Solution("1#0")};
    auto g = explicit_generator(set, 9);
    for (int i = 0; i < 10; ++i) CHECK(g->draw().solution == set.elements[0]);
  }
  SUBCASE("uniform frequencies stay within four sigma") {
    auto set = make_counter_set(4);
    auto g = explicit_generator(set, 1234);
    const int draws = 10000;
    std::map<std::string, int> freq;
    for (int i = 0; i < draws; ++i) ++freq[g->draw().solution.payload()];
    const double expect = draws / 4.0;
    const double sigma = std::sqrt(draws * 0.25 * 0.75);
    for (const auto& [payload, count] : freq)
      CHECK(std::abs(count - expect) <= 4.0 * sigma);
    CHECK(freq.size() == 4);
  }
  SUBCASE("declared bias two admits weights three to one") {
    ExplicitSet set;
    set.elements = {Solution("0"), Solution("1")};
    set.weights = {3.0, 1.0};
    CHECK(set.derived_bias() == doctest::Approx(2.0));
    CHECK_NOTHROW(explicit_generator(set, 5, 2.0));
    CHECK_THROWS_AS(explicit_generator(set, 5, 1.0), contract_error);
  }
  SUBCASE("empty sets cannot back a generator") {
    ExplicitSet set;
    CHECK_THROWS_AS(explicit_generator(set, 1), usage_error);
  }
  SUBCASE("file round trip") {
    auto set = make_counter_set(5);
    set.weights = {1, 2, 3, 4, 5};
    std::string path = "explicit_set_roundtrip.txt";
    set.save(path);
    ExplicitSet loaded = ExplicitSet::load(path);
    CHECK(loaded.elements == set.elements);
    REQUIRE(loaded.weights.size() == 5);
    CHECK(loaded.weights[3] == doctest::Approx(4.0));
    std::remove(path.c_str());
  }
}
