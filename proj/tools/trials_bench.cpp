// Wall-clock comparison of the serial trial loop against the OpenMP one.
// Step counts are the correctness signal elsewhere; this exists only to also
// size the thread speedup on a given machine.
//
//   trials_bench [trials] [set_size]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "enumkit/explicit_set.hpp"
#include "enumkit/trials.hpp"

using namespace enumkit;

namespace {

double time_run(TrialPlan plan, int threads) {
  plan.threads = threads;
  auto t0 = std::chrono::steady_clock::now();
  auto results = run_trials(plan);
  auto t1 = std::chrono::steady_clock::now();
  TrialSummary s = summarize(results);
  std::printf("  threads=%-2d coverage=%.4f mean_draws=%.1f\n", threads,
              s.coverage_fraction, s.mean_draws_to_complete);
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 2000;
  std::uint64_t s = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 256;

  TrialPlan plan;
  plan.set = make_counter_set(s);
  plan.cfg.epsilon = 0.1;
  plan.cfg.p_bits = 2 * plan.set.elements.front().length();
  plan.cfg.seed = 42;
  plan.scheme = SamplingScheme::dedup;
  plan.trials = trials;

  std::printf("trials=%llu set=%llu\n", static_cast<unsigned long long>(trials),
              static_cast<unsigned long long>(s));
  double serial = time_run(plan, 1);
  std::printf("serial reference: %.3fs\n", serial);
  int max_threads = omp_get_max_threads();
  if (max_threads > 1) {
    double parallel = time_run(plan, max_threads);
    std::printf("openmp (%d threads): %.3fs  speedup: %.2fx\n", max_threads, parallel,
                serial / parallel);
  }
  return 0;
}
