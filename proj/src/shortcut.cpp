#include "enumkit/shortcut.hpp"

#include "enumkit/errors.hpp"

namespace enumkit {

ShortcutRegularizer::ShortcutRegularizer(std::unique_ptr<StepwiseEnumerator> inner,
                                         ShortcutOptions opts) {
  if (!inner) throw usage_error("null inner enumerator");
  if (inner->outputs_emitted() != 0) throw usage_error("inner enumerator already started");
  if (!inner->snapshottable())
    throw capability_error("shortcut regularizer needs a snapshottable inner");
  const std::uint64_t n = inner->instance_size();
  h_n_ = opts.h.eval(n);
  p_n_ = opts.p.eval(n);
  q_n_ = opts.q.eval(n);
  if (h_n_ == 0 || p_n_ == 0) throw usage_error("h(n) and p(n) must be positive");
  scout_ = inner->clone();
  front_ = std::move(inner);
}

ShortcutRegularizer::ShortcutRegularizer(const ShortcutRegularizer& other)
    : StepwiseEnumerator(other),
      front_(other.front_->clone()),
      scout_(other.scout_->clone()),
      h_n_(other.h_n_),
      p_n_(other.p_n_),
      q_n_(other.q_n_),
      jumps_(other.jumps_),
      jump_bits_(other.jump_bits_),
      pairs_total_(other.pairs_total_),
      max_snapshot_bits_(other.max_snapshot_bits_),
      scout_credit_(other.scout_credit_),
      scout_gap_charge_(other.scout_gap_charge_),
      scout_capture_pending_(other.scout_capture_pending_),
      scout_gap_index_(other.scout_gap_index_) {}

std::unique_ptr<StepwiseEnumerator> ShortcutRegularizer::clone() const {
  return std::unique_ptr<StepwiseEnumerator>(new ShortcutRegularizer(*this));
}

// Advances the scout by 2 h(n) inner charge units per unit of front charge,
// detecting gaps and filing jump entries. Returns the charge consumed.
std::uint64_t ShortcutRegularizer::drive_scout(std::uint64_t front_charge) {
  scout_credit_ += 2 * h_n_ * front_charge;
  std::uint64_t spent = 0;
  while (scout_credit_ > 0 && !scout_->finished()) {
    StepResult s = scout_->step();
    spent += s.charge;
    scout_credit_ = scout_credit_ > s.charge ? scout_credit_ - s.charge : 0;
    if (s.precomputation_done) scout_gap_charge_ = 0;
    if (s.kind != StepKind::output) {
      scout_gap_charge_ += s.charge;
      if (scout_gap_charge_ > p_n_ && !scout_capture_pending_) {
        scout_capture_pending_ = true;
        scout_gap_index_ = scout_->outputs_emitted();
      }
      continue;
    }
    // an output ends any gap in progress
    scout_gap_charge_ = 0;
    if (scout_capture_pending_) {
      scout_capture_pending_ = false;
      if (scout_gap_index_ >= front_->outputs_emitted()) {
        // captures are unit charge (shared-state copy); the resume at the
        // jump is what pays linearly in the snapshot size
        Snapshot snap = take_snapshot(*scout_);
        spent += 1;
        max_snapshot_bits_ = std::max(max_snapshot_bits_, snap.size_bits());
        jump_bits_ += snap.size_bits() + s.solution.size_bits();
        jumps_.emplace(scout_gap_index_, JumpEntry{std::move(snap), s.solution});
        ++pairs_total_;
        if (pairs_total_ > q_n_)
          throw bound_violation_error("more than q(n)=" + std::to_string(q_n_) +
                                      " gaps above p(n); gap budget exceeded");
      }
    }
  }
  return spent;
}

StepResult ShortcutRegularizer::advance() {
  StepResult r;

  // a filed entry for the current index replaces the front state and emits
  // the solution on the far side of the gap
  auto it = jumps_.find(front_->outputs_emitted());
  if (it != jumps_.end()) {
    JumpEntry entry = std::move(it->second);
    jump_bits_ -= entry.state.size_bits() + entry.solution.size_bits();
    jumps_.erase(it);
    front_ = entry.state.resume();
    r.kind = StepKind::output;
    r.solution = std::move(entry.solution);
    r.charge = charge_bits(entry.state.size_bits()) + kOutputBookCharge;
    r.charge += drive_scout(r.charge);
    return r;
  }

  if (front_->finished()) {
    r.kind = StepKind::done;
    return r;
  }

  StepResult f = front_->step();
  r.kind = f.kind;
  r.solution = std::move(f.solution);
  r.charge = f.charge;
  r.precomputation_done = f.precomputation_done;
  if (r.kind == StepKind::done) return r;  // scout no longer needed
  r.charge += drive_scout(f.charge);
  return r;
}

std::uint64_t ShortcutRegularizer::state_size_bits() const {
  return front_->state_size_bits() + scout_->state_size_bits() + jump_bits_ + 256;
}

std::unique_ptr<ShortcutRegularizer> shortcut_regularize(
    std::unique_ptr<StepwiseEnumerator> inner, Polynomial h, Polynomial p, Polynomial q) {
  ShortcutOptions opts;
  opts.h = std::move(h);
  opts.p = std::move(p);
  opts.q = std::move(q);
  return std::make_unique<ShortcutRegularizer>(std::move(inner), std::move(opts));
}

}  // namespace enumkit
