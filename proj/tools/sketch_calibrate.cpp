// Monte-Carlo sweep behind the (k_min, repetitions) table in
// src/kmv_sketch.cpp: for each candidate parameter pair, measures the
// fraction of seeded streams whose estimate leaves [d/2, 2d] at any prefix.
//
//   sketch_calibrate [streams] [max_updates]

#include <cstdio>
#include <cstdlib>
#include <vector>

#include "enumkit/kmv_sketch.hpp"
#include "enumkit/rng.hpp"
#include "enumkit/solution.hpp"

using namespace enumkit;

namespace {

// Stream with duplicates mixed in; distinct count grows to ~2/3 of length.
bool stream_fails(KmvParams params, std::uint64_t seed, std::uint64_t updates) {
  DistinctSketch sk(params, seed);
  Rng rng(seed ^ 0x5ca1ab1e);
  std::uint64_t distinct = 0;
  for (std::uint64_t i = 0; i < updates; ++i) {
    bool fresh = distinct == 0 || rng.next_below(3) != 0;
    std::uint64_t value = fresh ? distinct : rng.next_below(distinct);
    if (fresh) ++distinct;
    sk.update(Solution::from_value(value, 24));
    double est = sk.estimate();
    double d = static_cast<double>(distinct);
    if (est < d / 2.0 || est > 2.0 * d) return true;
  }
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t streams = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 400;
  std::uint64_t max_updates = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : (1ULL << 16);

  const std::uint32_t k_mins[] = {16, 32, 64, 128};
  const std::uint32_t reps[] = {1, 3, 5, 7};

  std::printf("%8s %6s %6s %10s\n", "k_min", "reps", "fails", "rate");
  for (auto k : k_mins) {
    for (auto r : reps) {
      std::uint64_t fails = 0;
      for (std::uint64_t s = 1; s <= streams; ++s) {
        // vary stream lengths across seeds up to the cap
        std::uint64_t updates = 64 + (derive_seed(7, s) % max_updates);
        if (stream_fails({k, r}, s, updates)) ++fails;
      }
      std::printf("%8u %6u %6llu %10.4f\n", k, r,
                  static_cast<unsigned long long>(fails),
                  static_cast<double>(fails) / static_cast<double>(streams));
    }
  }
  return 0;
}
