#include "enumkit/stock.hpp"

#include "enumkit/errors.hpp"

namespace enumkit {

StockRegularizer::StockRegularizer(std::unique_ptr<StepwiseEnumerator> inner, StockOptions opts) {
  if (!inner) throw usage_error("null inner enumerator");
  if (inner->outputs_emitted() != 0) throw usage_error("inner enumerator already started");
  if (!inner->snapshottable())
    throw capability_error("stock regularizer needs a snapshottable inner");
  n_ = inner->instance_size();
  h_n_ = opts.h.eval(n_);
  p_n_ = opts.p.eval(n_);
  q_n_ = opts.q.eval(n_);
  if (h_n_ == 0 || p_n_ == 0 || q_n_ == 0)
    throw usage_error("h(n), p(n) and q(n) must be positive");
  hq_ = h_n_ * q_n_;
  bound_bits_ = inner->solution_bound_bits();
  id_ = "stock+" + inner->instance_id();

  ex_ = inner->clone();
  anchor_snap_ = take_snapshot(*ex_);  // run anchored at index 0
  prev_snap_ = anchor_snap_;
  sims_.push_back(Sim{std::move(inner), std::nullopt, 0});
}

std::uint64_t StockRegularizer::head_frontier() const {
  return sims_.empty() ? 0 : sims_.back().e->outputs_emitted();
}

void StockRegularizer::close_explorer_run(std::uint64_t run_end) {
  if (run_end <= run_anchor_ || !anchor_snap_ || !prev_snap_) return;
  const std::uint64_t length = run_end - run_anchor_;
  const std::uint64_t frontier = head_frontier();
  const bool stored_usable = stock_ && stock_->u >= frontier;
  if (run_anchor_ < frontier) return;  // partially emitted already
  if (!stored_usable || length > stock_->v - stock_->u)
    stock_ = Stock{run_anchor_, run_end, *anchor_snap_, *prev_snap_};
}

// Runs the explorer forward on its charge credit; detects run boundaries and
// maintains the boundary snapshots. Returns the charge consumed.
std::uint64_t StockRegularizer::drive_explorer(std::uint64_t en_charge) {
  if (ex_->finished()) return 0;
  ex_credit_ += 2 * hq_ * en_charge;
  std::uint64_t spent = 0;
  while (ex_credit_ > 0 && !ex_->finished()) {
    StepResult s = ex_->step();
    spent += s.charge;
    ex_credit_ = ex_credit_ > s.charge ? ex_credit_ - s.charge : 0;
    ex_charge_since_output_ += s.charge;
    if (s.precomputation_done) ex_charge_since_output_ = 0;
    if (s.kind == StepKind::output) {
      const std::uint64_t j = ex_->outputs_emitted();
      if (ex_charge_since_output_ > p_n_) {
        // the interval before j is a gap: close the run ending at j-1 and
        // re-anchor at j
        close_explorer_run(j - 1);
        run_anchor_ = j;
        anchor_snap_ = take_snapshot(*ex_);
        prev_snap_ = anchor_snap_;
        spent += 1;  // captures are unit charge; resumes pay linearly
      } else {
        prev_snap_ = take_snapshot(*ex_);
        spent += 1;
      }
      ex_charge_since_output_ = 0;
    } else if (ex_->finished()) {
      close_explorer_run(ex_->outputs_emitted());
    }
  }
  return spent;
}

bool StockRegularizer::rotate_head() {
  const std::uint64_t frontier = head_frontier();
  std::optional<std::uint64_t> u;
  std::unique_ptr<StepwiseEnumerator> resumed;

  if (stock_ && stock_->u >= frontier) {
    u = stock_->u;
    resumed = stock_->at_u.resume();
    stock_.reset();
  } else if (anchor_snap_ && run_anchor_ >= frontier &&
             ex_->outputs_emitted() > run_anchor_) {
    // the explorer's open run serves as an on-demand stock
    u = run_anchor_;
    resumed = anchor_snap_->resume();
  }
  if (!u) return false;

  sims_.back().stop_index = *u;
  retire_if_due(sims_.size() - 1);
  sims_.push_back(Sim{std::move(resumed), std::nullopt, 0});
  crosser_budget_ = hq_;
  ++rotations_;
  return true;
}

void StockRegularizer::spawn_trailing() {
  trailing_spawned_ = true;
  if (!stock_) return;
  if (sims_.empty()) {  // the whole run already finished
    stock_.reset();
    return;
  }
  const std::uint64_t frontier = head_frontier();
  if (stock_->u < frontier) {
    stock_.reset();
    return;
  }
  Stock s = *stock_;
  stock_.reset();
  sims_.back().stop_index = s.u;
  retire_if_due(sims_.size() - 1);
  sims_.push_back(Sim{s.at_u.resume(), s.v, 0});
  sims_.push_back(Sim{s.at_v.resume(), std::nullopt, 0});
  crosser_budget_ = hq_;
  ++rotations_;
}

void StockRegularizer::retire_if_due(std::size_t ix) {
  Sim& sim = sims_[ix];
  const bool done = sim.e->finished();
  const bool reached = sim.stop_index && sim.e->outputs_emitted() >= *sim.stop_index;
  if (done || reached)
    sims_.erase(sims_.begin() + static_cast<std::ptrdiff_t>(ix));
}

StepResult StockRegularizer::advance() {
  StepResult r;
  if (sims_.empty()) {
    r.kind = StepKind::done;
    return r;
  }

  // pick the advancing simulation: the head by default; the oldest crosser
  // while it has cycle budget or the head is done
  std::size_t target = sims_.size() - 1;
  const bool head_done = sims_.back().e->finished();
  if (sims_.size() > 1 && (crosser_budget_ > 0 || head_done)) target = 0;

  if (sims_[target].e->finished()) {
    // a finished head with no crossers ends the run
    retire_if_due(target);
    if (sims_.empty()) {
      r.kind = StepKind::done;
      return r;
    }
    r.charge = 1;
    return r;
  }

  StepResult s = sims_[target].e->step();
  const bool was_head = target == sims_.size() - 1;
  r.charge = s.charge;
  sims_[target].charge_since_output += s.charge;
  if (target == 0 && sims_.size() > 1)
    crosser_budget_ = crosser_budget_ > s.charge ? crosser_budget_ - s.charge : 0;

  if (s.kind == StepKind::output) {
    sims_[target].charge_since_output = 0;
    r.kind = StepKind::output;
    r.solution = std::move(s.solution);
    r.charge += kOutputBookCharge + charge_bits(r.solution.size_bits());
    if (was_head && sims_.size() > 1) crosser_budget_ = hq_;  // next cycle
  }

  retire_if_due(target);

  // gap handling on the head
  if (was_head && !sims_.empty() && target == sims_.size() - 1 &&
      sims_.back().charge_since_output > p_n_ && !sims_.back().e->finished()) {
    if (rotate_head()) {
      r.charge += kOutputBookCharge + charge_bits(sims_.back().e->state_size_bits());
    } else if (!ex_->finished()) {
      throw density_violation_error(
          "head met a p-gap with no fresh stock while the explorer is running");
    }
    // with the explorer finished the head simply crosses trailing gaps
  }

  r.charge += drive_explorer(s.charge);
  if (ex_->finished() && !trailing_spawned_) spawn_trailing();
  return r;
}

std::uint64_t StockRegularizer::state_size_bits() const {
  std::uint64_t bits = 256;
  for (const auto& sim : sims_) bits += sim.e->state_size_bits() + 128;
  if (!ex_->finished()) bits += ex_->state_size_bits();
  if (anchor_snap_) bits += anchor_snap_->size_bits();
  if (prev_snap_) bits += prev_snap_->size_bits();
  if (stock_) bits += stock_->at_u.size_bits() + stock_->at_v.size_bits();
  return bits;
}

std::unique_ptr<StockRegularizer> stock_regularize(std::unique_ptr<StepwiseEnumerator> inner,
                                                   Polynomial h, Polynomial p, Polynomial q) {
  StockOptions opts;
  opts.h = std::move(h);
  opts.p = std::move(p);
  opts.q = std::move(q);
  return std::make_unique<StockRegularizer>(std::move(inner), std::move(opts));
}

}  // namespace enumkit
