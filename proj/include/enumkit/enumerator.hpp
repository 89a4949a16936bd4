#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "enumkit/cost.hpp"
#include "enumkit/solution.hpp"

namespace enumkit {

enum class StepKind { no_output, output, done };

struct StepResult {
  StepKind kind = StepKind::no_output;
  Solution solution;              // meaningful iff kind == output
  std::uint64_t charge = 1;       // cost of this step, >= 1
  bool precomputation_done = false;  // may be flagged once, before any output
};

/// Resumable enumeration with explicit stepping. Implementations override
/// advance(); the base class enforces the step contract (no stepping after
/// termination, at-most-once precomputation fence, output counting).
class StepwiseEnumerator {
 public:
  virtual ~StepwiseEnumerator() = default;

  StepResult step();

  bool finished() const { return finished_; }
  std::uint64_t outputs_emitted() const { return outputs_; }

  /// Deep copy of the full resumable state. Only snapshottable enumerators
  /// support it; the default refuses.
  virtual bool snapshottable() const { return false; }
  virtual std::unique_ptr<StepwiseEnumerator> clone() const;

  /// Mutable state size in bits: enumerator state plus combinator-held
  /// buffers, excluding immutable instance data and already-emitted output.
  virtual std::uint64_t state_size_bits() const = 0;

  /// Declared bound on solution payload bits for this instance.
  virtual std::uint64_t solution_bound_bits() const = 0;

  /// Instance size n, the argument of declared polynomials.
  virtual std::uint64_t instance_size() const = 0;

  virtual std::string instance_id() const { return "anonymous"; }

  /// Cheap fingerprint of the resumable state; 0 when unsupported. Used to
  /// cross-check that two simulations of the same deterministic enumerator
  /// meet in the same state, not just at the same output index.
  virtual std::uint64_t state_digest() const { return 0; }

 protected:
  StepwiseEnumerator() = default;
  StepwiseEnumerator(const StepwiseEnumerator&) = default;
  StepwiseEnumerator& operator=(const StepwiseEnumerator&) = default;

  virtual StepResult advance() = 0;

 private:
  bool finished_ = false;
  bool fence_seen_ = false;
  std::uint64_t outputs_ = 0;
};

/// Copyable capture of an enumerator's full state at output index i.
/// Resuming yields exactly the suffix the captured run would produce.
class Snapshot {
 public:
  Snapshot(std::uint64_t index, std::shared_ptr<const StepwiseEnumerator> state);

  std::uint64_t index() const { return index_; }
  std::uint64_t size_bits() const { return size_bits_; }
  std::unique_ptr<StepwiseEnumerator> resume() const { return state_->clone(); }

 private:
  std::uint64_t index_ = 0;
  std::shared_ptr<const StepwiseEnumerator> state_;
  std::uint64_t size_bits_ = 0;
};

/// Captures the current state; throws capability_error for enumerators that
/// do not opt into snapshotting.
Snapshot take_snapshot(const StepwiseEnumerator& e);

}  // namespace enumkit
