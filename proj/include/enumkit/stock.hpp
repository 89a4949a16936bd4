#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "enumkit/enumerator.hpp"
#include "enumkit/polynomial.hpp"

namespace enumkit {

struct StockOptions {
  Polynomial h;  // average delay of the inner run
  Polynomial p;  // gap threshold
  Polynomial q;  // density parameter: some gap-free interval of length > k/q(n)
};

/// Gap masking for incremental-linear runs whose gaps may be too many to
/// enumerate but whose dense stretches are guaranteed long (the explorer /
/// stock scheme).
///
/// An explorer copy runs 2 h(n) q(n) inner charge units per emitted-side
/// charge unit and tracks the largest gap-free interval of fresh solutions —
/// the stock — via boundary snapshots. The emitting side is a chain of
/// simulations of the same run: the newest (the head) carries the delay
/// guarantee; when it meets a p-gap it is parked as a crosser aimed at the
/// stock's start and a fresh head resumes from the stock's start snapshot.
/// Crossers advance h(n) q(n) charge units per head output, oldest first,
/// and retire on reaching the next simulation's start, so every solution is
/// emitted exactly once (order may differ from the inner run). When the
/// explorer terminates, the trailing region after the last stock is handed
/// to one more simulation resumed from the stock's end snapshot.
class StockRegularizer : public StepwiseEnumerator {
 public:
  StockRegularizer(std::unique_ptr<StepwiseEnumerator> inner, StockOptions opts);

  std::uint64_t rotations() const { return rotations_; }
  std::uint64_t live_simulations() const { return sims_.size(); }

  bool snapshottable() const override { return false; }
  std::uint64_t state_size_bits() const override;
  std::uint64_t solution_bound_bits() const override { return bound_bits_; }
  std::uint64_t instance_size() const override { return n_; }
  std::string instance_id() const override { return id_; }

 protected:
  StepResult advance() override;

 private:
  struct Sim {
    std::unique_ptr<StepwiseEnumerator> e;
    std::optional<std::uint64_t> stop_index;  // retire after emitting this index
    std::uint64_t charge_since_output = 0;
  };

  struct Stock {
    std::uint64_t u = 0, v = 0;  // solutions (u, v] are gap-free
    Snapshot at_u;
    Snapshot at_v;
  };

  std::uint64_t drive_explorer(std::uint64_t en_charge);
  void close_explorer_run(std::uint64_t run_end);
  bool rotate_head();        // returns true when a stock was consumed
  void spawn_trailing();     // end-game once the explorer terminates
  std::uint64_t head_frontier() const;
  void retire_if_due(std::size_t ix);

  std::uint64_t n_, h_n_, p_n_, q_n_, hq_, bound_bits_;
  std::string id_;

  std::vector<Sim> sims_;  // oldest crosser first; back() is the head
  std::uint64_t crosser_budget_ = 0;

  // explorer side
  std::unique_ptr<StepwiseEnumerator> ex_;
  std::uint64_t ex_credit_ = 0;
  std::uint64_t ex_charge_since_output_ = 0;
  std::uint64_t run_anchor_ = 0;            // index u of the open run
  std::optional<Snapshot> anchor_snap_;     // state at output u
  std::optional<Snapshot> prev_snap_;       // state at the latest output
  std::optional<Stock> stock_;
  bool trailing_spawned_ = false;
  std::uint64_t rotations_ = 0;
};

std::unique_ptr<StockRegularizer> stock_regularize(std::unique_ptr<StepwiseEnumerator> inner,
                                                   Polynomial h, Polynomial p, Polynomial q);

}  // namespace enumkit
