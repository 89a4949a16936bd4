#pragma once

#include <cstdint>
#include <vector>

#include "enumkit/explicit_set.hpp"
#include "enumkit/generator.hpp"

namespace enumkit {

/// One seeded sampling-enumeration run over a known explicit set.
struct TrialResult {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::uint64_t draws = 0;              // total r at stop
  std::uint64_t draws_to_complete = 0;  // r when the last missing element appeared (0 if incomplete)
  std::uint64_t distinct = 0;           // distinct solutions emitted
  std::uint64_t emitted = 0;            // total emissions (> distinct only with repetitions)
  bool covered = false;                 // every set element emitted at least once
  std::uint64_t peak_aux_bits = 0;      // dedup trie / sketch memory, generator excluded
};

enum class SamplingScheme { dedup, biased, sketch };

struct TrialPlan {
  ExplicitSet set;
  SamplingConfig cfg;           // cfg.seed is the base seed; trials derive from it
  SamplingScheme scheme = SamplingScheme::dedup;
  std::uint64_t trials = 1;
  int threads = 0;              // 0 = library default (all available), 1 = serial
};

/// Runs the seeded trials; results are ordered by trial index and identical
/// for any thread count (per-trial seeds are derived by a splittable
/// scheme). threads > 1 uses OpenMP when compiled in.
std::vector<TrialResult> run_trials(const TrialPlan& plan);

/// Aggregate view used by verdicts and the bench tool.
struct TrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t covered = 0;
  double coverage_fraction = 0.0;
  double mean_draws_to_complete = 0.0;  // over covered trials
  std::uint64_t max_peak_aux_bits = 0;
  std::uint64_t duplicate_emissions = 0;  // total emitted - distinct over all trials
};
TrialSummary summarize(const std::vector<TrialResult>& results);

}  // namespace enumkit
