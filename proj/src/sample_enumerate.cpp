#include "enumkit/sample_enumerate.hpp"

#include <cmath>

#include "enumkit/errors.hpp"

namespace enumkit {

void SamplingConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw usage_error("epsilon must be in (0,1)");
  if (p_bits < 1) throw usage_error("p_bits must be at least 1");
}

std::uint64_t sampling_stop_multiplier(const SamplingConfig& cfg, double bias) {
  cfg.validate();
  double k = 2.0 * bias * (static_cast<double>(cfg.p_bits) - std::log2(cfg.epsilon / 2.0));
  return static_cast<std::uint64_t>(std::ceil(k - 1e-9));
}

std::uint64_t sketch_stop_multiplier(const SamplingConfig& cfg) {
  cfg.validate();
  double k = 4.0 * (static_cast<double>(cfg.p_bits) - std::log2(cfg.epsilon / 4.0));
  return static_cast<std::uint64_t>(std::ceil(k - 1e-9));
}

SampleEnumerator::SampleEnumerator(std::shared_ptr<SolutionGenerator> gen, SamplingConfig cfg,
                                   std::uint64_t stop_multiplier)
    : gen_(std::move(gen)), cfg_(cfg), K_(stop_multiplier) {
  if (!gen_) throw usage_error("null generator");
  cfg_.validate();
}

StepResult SampleEnumerator::advance() {
  StepResult r;
  const bool go = r_ <= K_ * static_cast<std::uint64_t>(trie_.size());
  if (log_enabled_) log_.push_back({r_, trie_.size(), go});
  if (!go) {
    r.kind = StepKind::done;
    return r;
  }
  auto draw = gen_->draw();
  ++r_;
  r.charge = draw.charge + 1;
  if (auto member = gen_->check_member(draw.solution); member && !*member)
    throw contract_error("generator drew a non-member " + draw.solution.to_hex());
  r.charge += charge_bits(2 * draw.solution.length());  // trie walk
  if (trie_.insert(draw.solution)) {
    draws_at_last_new_ = r_;
    r.kind = StepKind::output;
    r.solution = std::move(draw.solution);
    r.charge += charge_bits(cfg_.p_bits) + kOutputBookCharge;
  }
  return r;
}

std::uint64_t SampleEnumerator::state_size_bits() const {
  return trie_.size_bits() + gen_->state_size_bits() + 192;
}

std::unique_ptr<SampleEnumerator> sample_enumerate(std::shared_ptr<SolutionGenerator> gen,
                                                   const SamplingConfig& cfg) {
  if (!gen->uniform())
    throw usage_error("sample_enumerate needs a uniform generator; use the biased variant");
  auto K = sampling_stop_multiplier(cfg, 1.0);
  return std::make_unique<SampleEnumerator>(std::move(gen), cfg, K);
}

std::unique_ptr<SampleEnumerator> sample_enumerate_biased(
    std::shared_ptr<SolutionGenerator> gen, const SamplingConfig& cfg) {
  auto K = sampling_stop_multiplier(cfg, gen->bias_bound());
  return std::make_unique<SampleEnumerator>(std::move(gen), cfg, K);
}

SketchSampleEnumerator::SketchSampleEnumerator(std::shared_ptr<SolutionGenerator> gen,
                                               SamplingConfig cfg, DistinctSketch sketch)
    : gen_(std::move(gen)),
      cfg_(cfg),
      K_(sketch_stop_multiplier(cfg)),
      sketch_(std::move(sketch)) {
  if (!gen_) throw usage_error("null generator");
}

StepResult SketchSampleEnumerator::advance() {
  StepResult r;
  const bool go = static_cast<double>(r_) <= static_cast<double>(K_) * sketch_.estimate();
  if (!go) {
    r.kind = StepKind::done;
    return r;
  }
  auto draw = gen_->draw();
  ++r_;
  r.charge = draw.charge + 1;
  if (auto member = gen_->check_member(draw.solution); member && !*member)
    throw contract_error("generator drew a non-member " + draw.solution.to_hex());
  r.charge += sketch_.update(draw.solution);
  r.kind = StepKind::output;
  r.solution = std::move(draw.solution);
  r.charge += charge_bits(cfg_.p_bits);
  return r;
}

std::uint64_t SketchSampleEnumerator::state_size_bits() const {
  return non_generator_space_bits() + gen_->state_size_bits();
}

std::unique_ptr<SketchSampleEnumerator> sample_enumerate_sketch(
    std::shared_ptr<SolutionGenerator> gen, const SamplingConfig& cfg) {
  DistinctSketch sk(cfg.epsilon / 2.0, cfg.seed);
  return std::make_unique<SketchSampleEnumerator>(std::move(gen), cfg, std::move(sk));
}

std::unique_ptr<SketchSampleEnumerator> sample_enumerate_sketch(
    std::shared_ptr<SolutionGenerator> gen, const SamplingConfig& cfg, DistinctSketch sketch) {
  return std::make_unique<SketchSampleEnumerator>(std::move(gen), cfg, std::move(sketch));
}

}  // namespace enumkit
