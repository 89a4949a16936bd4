#pragma once

#include <functional>
#include <memory>

#include "enumkit/cnf.hpp"
#include "enumkit/enumerator.hpp"

namespace enumkit {

/// Decides whether a partial assignment (a prefix of variables 1..k) extends
/// to a satisfying assignment, and says what that decision costs. The default
/// backend is exhaustive; by default it is charged as a unit-cost oracle call
/// (the oracle-machine view under which backtrack search has polynomial
/// delay), optionally at its real exhaustive cost.
class ExtensionOracle {
 public:
  struct Answer {
    bool extendable = false;
    std::uint64_t charge = 1;
  };

  virtual ~ExtensionOracle() = default;
  virtual Answer query(const CnfFormula& f, const std::vector<std::uint8_t>& prefix) = 0;
};

enum class OracleCharging { unit, measured };

std::shared_ptr<ExtensionOracle> make_brute_force_oracle(
    OracleCharging charging = OracleCharging::unit);

/// Backtrack ("flashlight") enumeration of the satisfying assignments of f
/// in lexicographic order, pruning via the extension oracle. One step per
/// search-tree move; yields at complete assignments.
class FlashlightAllSat : public StepwiseEnumerator {
 public:
  FlashlightAllSat(CnfFormula f, std::shared_ptr<ExtensionOracle> oracle);

  bool snapshottable() const override { return true; }
  std::unique_ptr<StepwiseEnumerator> clone() const override;
  std::uint64_t state_size_bits() const override;
  std::uint64_t solution_bound_bits() const override;
  std::uint64_t instance_size() const override;
  std::string instance_id() const override;
  std::uint64_t state_digest() const override;

 protected:
  StepResult advance() override;

 private:
  std::shared_ptr<const CnfFormula> formula_;
  std::shared_ptr<ExtensionOracle> oracle_;

  // DFS position: prefix_ holds the values of the decided variables. After a
  // failed 0-branch the 1-branch must exist when the parent was admitted
  // (one_must_extend_); after backtracking over a 0 it may legitimately fail.
  std::vector<std::uint8_t> prefix_;
  enum class Phase { probe_root, at_node, try_one, backtrack };
  Phase phase_ = Phase::probe_root;
  bool one_must_extend_ = false;
};

std::unique_ptr<FlashlightAllSat> flashlight_allsat(
    CnfFormula f, std::shared_ptr<ExtensionOracle> oracle = nullptr);

}  // namespace enumkit
