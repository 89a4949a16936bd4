#pragma once

#include <memory>

#include "enumkit/enumerator.hpp"
#include "enumkit/generator.hpp"
#include "enumkit/kmv_sketch.hpp"

namespace enumkit {

/// Stopping multiplier for the dedup scheme: ceil(2*(p_bits - log2(eps/2))),
/// scaled by the generator bias when b > 1.
std::uint64_t sampling_stop_multiplier(const SamplingConfig& cfg, double bias);

/// Stopping multiplier for the sketch scheme: ceil(4*(p_bits - log2(eps/4))).
std::uint64_t sketch_stop_multiplier(const SamplingConfig& cfg);

/// Draw-until-stale enumeration from a random generator. Each step checks
/// the stopping rule r <= K*|E|, draws once, and emits the draw only when it
/// is new; the dedup set is a payload trie. With probability >= 1-epsilon
/// the whole solution set is emitted; duplicates are never emitted.
class SampleEnumerator : public StepwiseEnumerator {
 public:
  SampleEnumerator(std::shared_ptr<SolutionGenerator> gen, SamplingConfig cfg,
                   std::uint64_t stop_multiplier);

  std::uint64_t stop_multiplier() const { return K_; }
  std::uint64_t draws() const { return r_; }
  std::uint64_t distinct_found() const { return trie_.size(); }
  /// Draw count at the moment the most recent new solution appeared.
  std::uint64_t draws_at_last_new() const { return draws_at_last_new_; }
  /// Dedup-structure memory, excluding the generator.
  std::uint64_t dedup_space_bits() const { return trie_.size_bits(); }

  /// Optional log of (r, |E|, continued) stopping decisions for replay
  /// checks; test instrumentation, excluded from space accounting.
  struct Decision {
    std::uint64_t r;
    std::uint64_t e_size;
    bool continued;
  };
  void enable_decision_log() { log_enabled_ = true; }
  const std::vector<Decision>& decision_log() const { return log_; }

  std::uint64_t state_size_bits() const override;
  std::uint64_t solution_bound_bits() const override { return cfg_.p_bits; }
  std::uint64_t instance_size() const override { return gen_->instance_size(); }
  std::string instance_id() const override { return "sample-" + gen_->instance_id(); }

 protected:
  StepResult advance() override;

 private:
  std::shared_ptr<SolutionGenerator> gen_;
  SamplingConfig cfg_;
  std::uint64_t K_;
  std::uint64_t r_ = 0;
  std::uint64_t draws_at_last_new_ = 0;
  SolutionTrie trie_;
  bool log_enabled_ = false;
  std::vector<Decision> log_;
};

/// Uniform-generator front end (Algorithm 1 shape).
std::unique_ptr<SampleEnumerator> sample_enumerate(std::shared_ptr<SolutionGenerator> gen,
                                                   const SamplingConfig& cfg);

/// Biased-generator variant: identical loop with the bias-scaled multiplier.
std::unique_ptr<SampleEnumerator> sample_enumerate_biased(
    std::shared_ptr<SolutionGenerator> gen, const SamplingConfig& cfg);

/// Sketch-based polynomial-space variant (Algorithm 2 shape): every draw is
/// emitted immediately (repetitions allowed); the stopping rule compares r
/// against K times the sketch estimate; no solution set is stored.
class SketchSampleEnumerator : public StepwiseEnumerator {
 public:
  SketchSampleEnumerator(std::shared_ptr<SolutionGenerator> gen, SamplingConfig cfg,
                         DistinctSketch sketch);

  std::uint64_t stop_multiplier() const { return K_; }
  std::uint64_t draws() const { return r_; }
  const DistinctSketch& sketch() const { return sketch_; }
  /// Sketch plus counters; everything but the generator.
  std::uint64_t non_generator_space_bits() const { return sketch_.size_bits() + 192; }

  std::uint64_t state_size_bits() const override;
  std::uint64_t solution_bound_bits() const override { return cfg_.p_bits; }
  std::uint64_t instance_size() const override { return gen_->instance_size(); }
  std::string instance_id() const override { return "sketchsample-" + gen_->instance_id(); }

 protected:
  StepResult advance() override;

 private:
  std::shared_ptr<SolutionGenerator> gen_;
  SamplingConfig cfg_;
  std::uint64_t K_;
  std::uint64_t r_ = 0;
  DistinctSketch sketch_;
};

std::unique_ptr<SketchSampleEnumerator> sample_enumerate_sketch(
    std::shared_ptr<SolutionGenerator> gen, const SamplingConfig& cfg);
std::unique_ptr<SketchSampleEnumerator> sample_enumerate_sketch(
    std::shared_ptr<SolutionGenerator> gen, const SamplingConfig& cfg, DistinctSketch sketch);

}  // namespace enumkit
