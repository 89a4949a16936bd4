#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "enumkit/solution.hpp"

namespace enumkit {

/// Sketch parameters: number of retained minimum hash values per repetition
/// and number of independent repetitions combined by median.
struct KmvParams {
  std::uint32_t k_min = 0;
  std::uint32_t repetitions = 0;
};

/// Calibrated (k_min, repetitions) meeting the all-times factor-2 contract at
/// failure budget delta. Values come from the Monte-Carlo sweep in
/// tools/sketch_calibrate.cpp and are frozen as a versioned table.
KmvParams kmv_params_for_delta(double delta);

/// Bounded-space distinct-count estimator: k-minimum-values under a seeded
/// 2-universal hash, median of independent repetitions. Memory is
/// k_min * repetitions registers regardless of stream length; repeated
/// updates with the same element are no-ops.
class DistinctSketch {
 public:
  DistinctSketch(KmvParams params, std::uint64_t seed);
  DistinctSketch(double delta, std::uint64_t seed)
      : DistinctSketch(kmv_params_for_delta(delta), seed) {}

  /// Folds one element into the sketch; returns the charge consumed
  /// (O(repetitions) word operations).
  std::uint64_t update(const Solution& e);

  /// Exact distinct count while any repetition still has room; the
  /// (k_min-1)/v_k estimator afterwards. Cached, so O(1) per call.
  double estimate() const { return cached_estimate_; }

  std::uint64_t size_bits() const;
  const KmvParams& params() const { return params_; }

  /// Versioned binary blob: header plus registers.
  std::vector<std::uint8_t> serialize() const;
  static DistinctSketch deserialize(const std::vector<std::uint8_t>& blob);

  /// Test hook: overrides the per-repetition hash (same function applied to
  /// every repetition). Production code never sets it.
  void override_hash(std::function<std::uint64_t(const Solution&)> h) {
    hash_override_ = std::move(h);
  }

 private:
  struct Repetition {
    std::uint64_t a = 0, b = 0;           // 2-universal hash coefficients
    std::vector<std::uint64_t> registers;  // sorted ascending, <= k_min
  };

  std::uint64_t rep_hash(const Repetition& rep, const Solution& e) const;
  double rep_estimate(const Repetition& rep) const;
  void refresh_estimate();

  KmvParams params_;
  std::uint64_t seed_ = 0;
  std::vector<Repetition> reps_;
  double cached_estimate_ = 0.0;
  std::function<std::uint64_t(const Solution&)> hash_override_;
};

}  // namespace enumkit
