#pragma once

#include <deque>
#include <memory>

#include "enumkit/enumerator.hpp"
#include "enumkit/polynomial.hpp"

namespace enumkit {

/// What to do when the inner enumerator is caught violating its asserted
/// bound (the queue is empty at a crossed threshold while the inner still
/// runs): raise immediately, or record the violation and keep the catch-up
/// schedule, emitting as soon as solutions arrive.
enum class ViolationPolicy { raise, flag };

struct QueueAmortizeOptions {
  std::uint64_t a = 0;       // asserted exponent: k solutions within k^(a+1) p(n)
  Polynomial p;              // asserted polynomial factor
  ViolationPolicy on_violation = ViolationPolicy::raise;
};

/// Queue buffering that turns incremental time k^(a+1) p(n) into a regular
/// output schedule: the inner run feeds a queue, and the k-th solution is
/// released when the inner charge counter reaches p(n) * k^(a+1). After the
/// inner terminates the queue flushes one solution per step.
class QueueAmortizer : public StepwiseEnumerator {
 public:
  QueueAmortizer(std::unique_ptr<StepwiseEnumerator> inner, QueueAmortizeOptions opts);

  bool bound_violated() const { return violated_; }
  std::uint64_t inner_charge() const { return inner_charge_; }

  bool snapshottable() const override { return inner_->snapshottable(); }
  std::unique_ptr<StepwiseEnumerator> clone() const override;
  std::uint64_t state_size_bits() const override;
  std::uint64_t solution_bound_bits() const override { return inner_->solution_bound_bits(); }
  std::uint64_t instance_size() const override { return inner_->instance_size(); }
  std::string instance_id() const override { return "queue+" + inner_->instance_id(); }

 protected:
  StepResult advance() override;

 private:
  QueueAmortizer(const QueueAmortizer& other);

  std::uint64_t threshold_for(std::uint64_t k) const;  // p(n) * k^(a+1), saturating

  std::unique_ptr<StepwiseEnumerator> inner_;
  QueueAmortizeOptions opts_;
  std::uint64_t p_n_;
  std::uint64_t inner_charge_ = 0;   // the counter c of the construction
  std::uint64_t released_ = 0;       // solutions emitted so far (k-1)
  std::deque<Solution> queue_;
  std::uint64_t queued_bits_ = 0;
  bool violated_ = false;
};

std::unique_ptr<QueueAmortizer> queue_amortize(std::unique_ptr<StepwiseEnumerator> inner,
                                               std::uint64_t a, Polynomial p,
                                               ViolationPolicy on_violation = ViolationPolicy::raise);

}  // namespace enumkit
