#include "enumkit/trials.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

#include "enumkit/errors.hpp"
#include "enumkit/rng.hpp"
#include "enumkit/sample_enumerate.hpp"

namespace enumkit {

namespace {

TrialResult run_one(const TrialPlan& plan, const std::vector<Solution>& sorted,
                    std::uint64_t trial) {
  TrialResult res;
  res.trial = trial;
  res.seed = derive_seed(plan.cfg.seed, trial);

  SamplingConfig cfg = plan.cfg;
  cfg.seed = res.seed;
  auto gen = explicit_generator(plan.set, res.seed);
  const std::size_t s = plan.set.elements.size();

  // coverage oracle: flag per element of the known set
  std::vector<char> seen(s, 0);
  std::size_t covered_count = 0;
  auto mark = [&](const Solution& sol) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), sol);
    std::size_t ix = static_cast<std::size_t>(it - sorted.begin());
    if (!seen[ix]) {
      seen[ix] = 1;
      ++covered_count;
      return true;
    }
    return false;
  };

  if (plan.scheme == SamplingScheme::sketch) {
    auto e = sample_enumerate_sketch(std::move(gen), cfg);
    while (!e->finished()) {
      StepResult r = e->step();
      if (r.kind == StepKind::output) {
        ++res.emitted;
        if (mark(r.solution)) res.distinct = covered_count;
        if (covered_count == s && res.draws_to_complete == 0)
          res.draws_to_complete = e->draws();
      }
      res.peak_aux_bits = std::max(res.peak_aux_bits, e->non_generator_space_bits());
    }
    res.draws = e->draws();
  } else {
    auto e = plan.scheme == SamplingScheme::biased
                 ? sample_enumerate_biased(std::move(gen), cfg)
                 : sample_enumerate(std::move(gen), cfg);
    while (!e->finished()) {
      StepResult r = e->step();
      if (r.kind == StepKind::output) {
        ++res.emitted;
        mark(r.solution);
        if (covered_count == s && res.draws_to_complete == 0)
          res.draws_to_complete = e->draws();
      }
      res.peak_aux_bits = std::max(res.peak_aux_bits, e->dedup_space_bits());
    }
    res.draws = e->draws();
    res.distinct = e->distinct_found();
  }
  res.distinct = std::max<std::uint64_t>(res.distinct, covered_count);
  res.covered = covered_count == s;
  if (!res.covered) res.draws_to_complete = 0;
  return res;
}

}  // namespace

std::vector<TrialResult> run_trials(const TrialPlan& plan) {
  if (plan.trials == 0) return {};
  plan.set.validate();
  std::vector<Solution> sorted = plan.set.elements;
  std::sort(sorted.begin(), sorted.end());
  std::vector<TrialResult> results(plan.trials);

#ifdef _OPENMP
  const bool parallel = plan.threads != 1;
  int want = plan.threads > 0 ? plan.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(want) if (parallel)
  for (long long i = 0; i < static_cast<long long>(plan.trials); ++i)
    results[static_cast<std::size_t>(i)] = run_one(plan, sorted, static_cast<std::uint64_t>(i));
#else
  for (std::uint64_t i = 0; i < plan.trials; ++i)
    results[static_cast<std::size_t>(i)] = run_one(plan, sorted, i);
#endif
  return results;
}

TrialSummary summarize(const std::vector<TrialResult>& results) {
  TrialSummary s;
  s.trials = results.size();
  double sum_complete = 0.0;
  std::uint64_t complete = 0;
  for (const auto& r : results) {
    if (r.covered) {
      ++s.covered;
      sum_complete += static_cast<double>(r.draws_to_complete);
      ++complete;
    }
    s.max_peak_aux_bits = std::max(s.max_peak_aux_bits, r.peak_aux_bits);
    s.duplicate_emissions += r.emitted - r.distinct;
  }
  s.coverage_fraction = s.trials ? static_cast<double>(s.covered) / s.trials : 0.0;
  s.mean_draws_to_complete = complete ? sum_complete / static_cast<double>(complete) : 0.0;
  return s;
}

}  // namespace enumkit
