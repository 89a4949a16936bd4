#include "enumkit/enumerator.hpp"

#include "enumkit/errors.hpp"

namespace enumkit {

StepResult StepwiseEnumerator::step() {
  if (finished_) throw usage_error("step() on a terminated enumerator");
  StepResult r = advance();
  if (r.charge == 0) r.charge = 1;
  if (r.precomputation_done) {
    if (fence_seen_) throw usage_error("precomputation fence declared twice");
    if (outputs_ > 0) throw usage_error("precomputation fence after first output");
    fence_seen_ = true;
  }
  if (r.kind == StepKind::output) ++outputs_;
  if (r.kind == StepKind::done) finished_ = true;
  return r;
}

std::unique_ptr<StepwiseEnumerator> StepwiseEnumerator::clone() const {
  throw capability_error("enumerator '" + instance_id() + "' is not snapshottable");
}

Snapshot::Snapshot(std::uint64_t index, std::shared_ptr<const StepwiseEnumerator> state)
    : index_(index), state_(std::move(state)) {
  size_bits_ = state_->state_size_bits();
}

Snapshot take_snapshot(const StepwiseEnumerator& e) {
  if (!e.snapshottable())
    throw capability_error("enumerator '" + e.instance_id() + "' is not snapshottable");
  return Snapshot(e.outputs_emitted(),
                  std::shared_ptr<const StepwiseEnumerator>(e.clone().release()));
}

}  // namespace enumkit
