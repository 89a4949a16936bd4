#pragma once

#include <map>
#include <memory>

#include "enumkit/enumerator.hpp"
#include "enumkit/polynomial.hpp"

namespace enumkit {

/// Reported factor: the regularized run promises no gaps larger than
/// p(n) * h(n) * kShortcutDelayFactor charged steps.
inline constexpr std::uint64_t kShortcutDelayFactor = 4;

struct ShortcutOptions {
  Polynomial h;  // average delay of the inner run
  Polynomial p;  // gap threshold
  Polynomial q;  // gap budget: at most q(n) p-gaps
};

/// Gap masking for incremental-linear runs with few large gaps. Two copies
/// of the inner run: the front copy emits; a scout running 2 h(n) times
/// faster detects p-gaps and files (index, state-after-gap, solution) jump
/// entries. When the front copy's output index has a filed entry its state
/// is replaced and the solution after the gap is emitted immediately, so
/// the output carries no gap above p(n) h(n) times the reported factor.
class ShortcutRegularizer : public StepwiseEnumerator {
 public:
  ShortcutRegularizer(std::unique_ptr<StepwiseEnumerator> inner, ShortcutOptions opts);

  std::uint64_t pairs_stored_total() const { return pairs_total_; }
  std::uint64_t pairs_live() const { return jumps_.size(); }
  std::uint64_t max_snapshot_bits() const { return max_snapshot_bits_; }

  bool snapshottable() const override { return true; }
  std::unique_ptr<StepwiseEnumerator> clone() const override;
  std::uint64_t state_size_bits() const override;
  std::uint64_t solution_bound_bits() const override { return front_->solution_bound_bits(); }
  std::uint64_t instance_size() const override { return front_->instance_size(); }
  std::string instance_id() const override { return "shortcut+" + front_->instance_id(); }

 protected:
  StepResult advance() override;

 private:
  ShortcutRegularizer(const ShortcutRegularizer& other);

  struct JumpEntry {
    Snapshot state;      // inner state right after emitting index+1
    Solution solution;   // the (index+1)-th solution, re-emitted at the jump
  };

  std::uint64_t drive_scout(std::uint64_t front_charge);

  std::unique_ptr<StepwiseEnumerator> front_;
  std::unique_ptr<StepwiseEnumerator> scout_;
  std::uint64_t h_n_, p_n_, q_n_;

  std::map<std::uint64_t, JumpEntry> jumps_;  // keyed on front output index
  std::uint64_t jump_bits_ = 0;
  std::uint64_t pairs_total_ = 0;
  std::uint64_t max_snapshot_bits_ = 0;

  std::uint64_t scout_credit_ = 0;          // inner charge owed to the scout
  std::uint64_t scout_gap_charge_ = 0;      // scout charge since its last output
  bool scout_capture_pending_ = false;      // a detected gap awaits its end state
  std::uint64_t scout_gap_index_ = 0;
};

std::unique_ptr<ShortcutRegularizer> shortcut_regularize(
    std::unique_ptr<StepwiseEnumerator> inner, Polynomial h, Polynomial p, Polynomial q);

}  // namespace enumkit
