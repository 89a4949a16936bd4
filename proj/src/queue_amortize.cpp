#include "enumkit/queue_amortize.hpp"

#include <limits>

#include "enumkit/errors.hpp"

namespace enumkit {

QueueAmortizer::QueueAmortizer(std::unique_ptr<StepwiseEnumerator> inner,
                               QueueAmortizeOptions opts)
    : inner_(std::move(inner)), opts_(std::move(opts)) {
  if (!inner_) throw usage_error("null inner enumerator");
  if (inner_->outputs_emitted() != 0) throw usage_error("inner enumerator already started");
  p_n_ = opts_.p.eval(inner_->instance_size());
  if (p_n_ == 0) throw usage_error("p(n) must be positive");
}

QueueAmortizer::QueueAmortizer(const QueueAmortizer& other)
    : StepwiseEnumerator(other),
      inner_(other.inner_->clone()),
      opts_(other.opts_),
      p_n_(other.p_n_),
      inner_charge_(other.inner_charge_),
      released_(other.released_),
      queue_(other.queue_),
      queued_bits_(other.queued_bits_),
      violated_(other.violated_) {}

std::unique_ptr<StepwiseEnumerator> QueueAmortizer::clone() const {
  if (!inner_->snapshottable())
    throw capability_error("queue amortizer over a non-snapshottable inner");
  return std::unique_ptr<StepwiseEnumerator>(new QueueAmortizer(*this));
}

std::uint64_t QueueAmortizer::threshold_for(std::uint64_t k) const {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = p_n_;
  for (std::uint64_t i = 0; i < opts_.a + 1; ++i) {
    if (k != 0 && acc > kMax / k) return kMax;
    acc *= k;
  }
  return acc;
}

StepResult QueueAmortizer::advance() {
  StepResult r;
  const bool behind = inner_charge_ >= threshold_for(released_ + 1);

  // release when the schedule allows it, or unconditionally once the inner
  // has terminated (final flush)
  if (!queue_.empty() && (behind || inner_->finished())) {
    r.kind = StepKind::output;
    r.solution = std::move(queue_.front());
    queue_.pop_front();
    queued_bits_ -= r.solution.size_bits();
    ++released_;
    r.charge = kOutputBookCharge + charge_bits(r.solution.size_bits());
    return r;
  }

  if (inner_->finished()) {
    r.kind = StepKind::done;
    return r;
  }

  StepResult inner_step = inner_->step();
  inner_charge_ += inner_step.charge;
  r.charge = inner_step.charge;
  r.precomputation_done = inner_step.precomputation_done;
  if (inner_step.kind == StepKind::output) {
    queue_.push_back(std::move(inner_step.solution));
    queued_bits_ += queue_.back().size_bits();
  }

  // a crossed threshold with nothing to release means the asserted bound
  // k^(a+1) p(n) was false
  if (queue_.empty() && !inner_->finished() &&
      inner_charge_ >= threshold_for(released_ + 1) && !violated_) {
    violated_ = true;
    if (opts_.on_violation == ViolationPolicy::raise)
      throw bound_violation_error("inner produced fewer than " +
                                  std::to_string(released_ + 1) + " solutions within " +
                                  std::to_string(threshold_for(released_ + 1)) + " steps");
  }
  return r;
}

std::uint64_t QueueAmortizer::state_size_bits() const {
  return inner_->state_size_bits() + queued_bits_ + 256;
}

std::unique_ptr<QueueAmortizer> queue_amortize(std::unique_ptr<StepwiseEnumerator> inner,
                                               std::uint64_t a, Polynomial p,
                                               ViolationPolicy on_violation) {
  QueueAmortizeOptions opts;
  opts.a = a;
  opts.p = std::move(p);
  opts.on_violation = on_violation;
  return std::make_unique<QueueAmortizer>(std::move(inner), std::move(opts));
}

}  // namespace enumkit
