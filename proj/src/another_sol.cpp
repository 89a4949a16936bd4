#include "enumkit/another_sol.hpp"

#include "enumkit/errors.hpp"

namespace enumkit {

namespace {

class AnotherSolEnumerator : public StepwiseEnumerator {
 public:
  AnotherSolEnumerator(AnotherSolProcedure proc, std::uint64_t n, std::uint64_t bound_bits,
                       std::string id)
      : proc_(std::make_shared<const AnotherSolProcedure>(std::move(proc))),
        n_(n),
        bound_bits_(bound_bits),
        id_(std::move(id)) {}

  bool snapshottable() const override { return true; }
  std::unique_ptr<StepwiseEnumerator> clone() const override {
    return std::make_unique<AnotherSolEnumerator>(*this);
  }
  std::uint64_t state_size_bits() const override { return seen_.size_bits() + 128; }
  std::uint64_t solution_bound_bits() const override { return bound_bits_; }
  std::uint64_t instance_size() const override { return n_; }
  std::string instance_id() const override { return id_; }

 protected:
  StepResult advance() override {
    StepResult r;
    AnotherSolOutcome out = proc_->invoke(seen_);
    r.charge = out.charge;
    if (out.bound_violation)
      throw bound_violation_error(
          "search procedure observed its asserted incremental bound to fail");
    if (!out.solution) {
      r.kind = StepKind::done;
      return r;
    }
    if (seen_.contains(*out.solution))
      throw contract_error("search procedure returned duplicate " + out.solution->to_hex());
    if (proc_->can_check_membership() && !proc_->is_member(*out.solution))
      throw contract_error("search procedure returned non-member " + out.solution->to_hex());
    seen_.insert(*out.solution);
    r.charge += charge_bits(out.solution->size_bits()) + kOutputBookCharge;
    r.kind = StepKind::output;
    r.solution = std::move(*out.solution);
    return r;
  }

 private:
  std::shared_ptr<const AnotherSolProcedure> proc_;
  SolutionSet seen_;
  std::uint64_t n_;
  std::uint64_t bound_bits_;
  std::string id_;
};

}  // namespace

std::unique_ptr<StepwiseEnumerator> enumerator_from_another_sol(AnotherSolProcedure proc,
                                                                std::uint64_t instance_size,
                                                                std::uint64_t solution_bound_bits,
                                                                std::string instance_id) {
  return std::make_unique<AnotherSolEnumerator>(std::move(proc), instance_size,
                                                solution_bound_bits, std::move(instance_id));
}

AnotherSolProcedure another_sol_from_enumerator(const StepwiseEnumerator& e,
                                                IncrementalBounds bounds) {
  if (e.outputs_emitted() != 0)
    throw usage_error("another_sol_from_enumerator needs an unstarted enumerator");
  Snapshot start = take_snapshot(e);
  const std::uint64_t n = e.instance_size();

  auto fn = [start, bounds, n](const SolutionSet& seen) -> AnotherSolOutcome {
    AnotherSolOutcome out;
    // budget c * n^a * (1+|S|)^b, saturating
    long double budget_ld = static_cast<long double>(bounds.c);
    for (std::uint64_t i = 0; i < bounds.a; ++i) budget_ld *= static_cast<long double>(n);
    for (std::uint64_t i = 0; i < bounds.b; ++i)
      budget_ld *= static_cast<long double>(1 + seen.size());
    const std::uint64_t budget =
        budget_ld > 1e18L ? UINT64_MAX : static_cast<std::uint64_t>(budget_ld);

    auto sim = start.resume();
    out.charge = charge_bits(start.size_bits());
    std::vector<Solution> found;
    std::uint64_t used = 0;
    while (!sim->finished() && used < budget) {
      StepResult r = sim->step();
      used += r.charge;
      if (r.kind == StepKind::output) found.push_back(std::move(r.solution));
    }
    out.charge += used;

    if (sim->finished()) {
      // complete run: exhaustive comparison against S
      for (auto& y : found) {
        out.charge += charge_bits(y.size_bits());
        if (!seen.contains(y)) {
          out.solution = std::move(y);
          return out;
        }
      }
      return out;  // no-more
    }
    // truncated run: under the asserted bound it already holds > |S| solutions
    for (auto& y : found) {
      out.charge += charge_bits(y.size_bits());
      if (!seen.contains(y)) {
        out.solution = std::move(y);
        return out;
      }
    }
    out.bound_violation = true;  // fewer distinct-from-S solutions than promised
    return out;
  };

  auto member = nullptr;  // membership policing is the instance's concern
  Polynomial declared({bounds.c});
  return AnotherSolProcedure(std::move(fn), std::move(declared), member);
}

}  // namespace enumkit
