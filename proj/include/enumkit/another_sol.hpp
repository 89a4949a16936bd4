#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "enumkit/enumerator.hpp"
#include "enumkit/polynomial.hpp"

namespace enumkit {

/// Result of one search for a solution outside the given set: a fresh
/// solution, or a no-more marker (nullopt). A procedure synthesized from an
/// enumerator flags runs where the asserted incremental bound was observed
/// to fail, in which case a no-more answer is unreliable.
struct AnotherSolOutcome {
  std::optional<Solution> solution;
  std::uint64_t charge = 1;
  bool bound_violation = false;
};

/// The search problem "find y in A(x) \ S or certify S covers A(x)",
/// packaged with its declared time bound and an optional membership test
/// used to police the contract.
class AnotherSolProcedure {
 public:
  using Fn = std::function<AnotherSolOutcome(const SolutionSet& seen)>;
  using MemberFn = std::function<bool(const Solution&)>;

  AnotherSolProcedure(Fn fn, Polynomial declared_time, MemberFn member = nullptr)
      : fn_(std::move(fn)), declared_time_(std::move(declared_time)), member_(std::move(member)) {}

  AnotherSolOutcome invoke(const SolutionSet& seen) const { return fn_(seen); }
  const Polynomial& declared_time() const { return declared_time_; }
  bool can_check_membership() const { return static_cast<bool>(member_); }
  bool is_member(const Solution& s) const { return member_ ? member_(s) : true; }

 private:
  Fn fn_;
  Polynomial declared_time_;
  MemberFn member_;
};

/// Saturation loop: call the procedure until no new solution is found. The
/// emitted set is exactly A(x) with no duplicates; a duplicate or non-member
/// answer from the procedure raises contract_error.
std::unique_ptr<StepwiseEnumerator> enumerator_from_another_sol(
    AnotherSolProcedure proc, std::uint64_t instance_size, std::uint64_t solution_bound_bits,
    std::string instance_id = "anothersol");

/// Asserted incremental-time constants for a stepwise enumerator:
/// m solutions within c * m^a * n^b charged steps.
struct IncrementalBounds {
  std::uint64_t a = 1;
  std::uint64_t b = 1;
  std::uint64_t c = 1;
};

/// Derives the search procedure from an enumerator by bounded simulation:
/// runs a fresh copy for c * n^a * (1+|S|)^b charged steps; a completed run
/// is compared against S exhaustively, an incomplete run must already hold
/// more than |S| solutions. Needs a snapshottable enumerator.
AnotherSolProcedure another_sol_from_enumerator(const StepwiseEnumerator& e,
                                                IncrementalBounds bounds);

}  // namespace enumkit
