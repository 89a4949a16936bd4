// Test-side oracles, kept independent of the library code paths they check.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "enumkit/cnf.hpp"
#include "enumkit/rng.hpp"
#include "enumkit/solution.hpp"
#include "enumkit/trace.hpp"

namespace oracles {

// Clause evaluation written from the definition, separate from the library
// evaluator: a clause holds iff some literal matches the assignment bits.
inline bool eval_clause(const std::vector<int>& clause, std::uint64_t value, int n) {
  for (int lit : clause) {
    int var = lit > 0 ? lit : -lit;
    bool bit = (value >> (n - var)) & 1;  // variable 1 is the leading payload symbol
    if ((lit > 0) == bit) return true;
  }
  return false;
}

// All satisfying assignments by exhaustive scan, as payload strings in
// lexicographic order.
inline std::vector<enumkit::Solution> sat_brute_force(const enumkit::CnfFormula& f) {
  std::vector<enumkit::Solution> out;
  const int n = f.n_vars;
  for (std::uint64_t v = 0; v < (1ULL << n); ++v) {
    bool ok = true;
    for (const auto& c : f.clauses)
      if (!eval_clause(c, v, n)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(enumkit::Solution::from_value(v, static_cast<std::size_t>(n)));
  }
  return out;
}

// Coupon collector: expected draws to see all s equally likely elements.
inline double coupon_collector_mean(std::uint64_t s) {
  double acc = 0.0;
  for (std::uint64_t i = 1; i <= s; ++i) acc += 1.0 / static_cast<double>(i);
  return static_cast<double>(s) * acc;
}

// Gap set recomputed directly from the definition.
inline std::vector<std::uint64_t> gaps_by_definition(const enumkit::EnumerationTrace& t,
                                                     std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::size_t i = 0; i < t.output_times.size(); ++i) {
    std::uint64_t prev = i == 0 ? t.precomputation_steps : t.output_times[i - 1];
    if (t.output_times[i] - prev > p) out.push_back(i);
  }
  return out;
}

// Random small CNF for property corpora; clause count and widths seeded.
inline enumkit::CnfFormula random_cnf(std::uint64_t seed, int n_vars, int n_clauses,
                                      int max_width = 3) {
  enumkit::Rng rng(seed);
  enumkit::CnfFormula f;
  f.n_vars = n_vars;
  for (int c = 0; c < n_clauses; ++c) {
    int width = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_width)));
    std::vector<int> clause;
    for (int l = 0; l < width; ++l) {
      int var = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n_vars)));
      int lit = rng.next_below(2) ? var : -var;
      clause.push_back(lit);
    }
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

inline std::vector<enumkit::Solution> sorted(std::vector<enumkit::Solution> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace oracles
